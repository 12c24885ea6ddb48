// fockcrystal.cpp

#include "fockcrystal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystalkit {

namespace {

// Total string statistics of a word of factors with per-factor (eps, phi):
// fold the signature cancellation left to right.
std::pair<long, long> fold_eps_phi(const std::vector<std::pair<long, long>>& word) {
    long eps = 0, open_plus = 0;
    for (const auto& [e, p] : word) {
        long cancel = std::min(open_plus, e);
        open_plus -= cancel;
        eps += e - cancel;
        open_plus += p;
    }
    return {eps, open_plus};
}

}  // namespace

// ---- Matrix01 ----

int Matrix01::at(long i, long j) const {
    if (j < 1 || j > cols) throw DomainError("column index out of range");
    if (i < row_lo) return 1;
    if (i > row_hi) return 0;
    return bits[static_cast<size_t>((i - row_lo) * cols + (j - 1))];
}

int& Matrix01::cell(long i, long j) {
    if (i < row_lo || i > row_hi || j < 1 || j > cols)
        throw DomainError("cell index outside the window");
    return bits[static_cast<size_t>((i - row_lo) * cols + (j - 1))];
}

std::string Matrix01::str() const {
    std::string s;
    for (long i = row_lo; i <= row_hi; ++i) {
        if (i > row_lo) s += '/';
        for (long j = 1; j <= cols; ++j) s += static_cast<char>('0' + at(i, j));
    }
    return s;
}

// ---- MatrixCrystal ----

MatrixCrystal::MatrixCrystal(long m, long n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw DomainError("matrix crystal needs m, n >= 1");
    for (long j = n - 1; j >= 1; --j) colors_.push_back(-j);
    for (long i = 1; i <= m - 1; ++i) colors_.push_back(i);
}

std::optional<Elem> MatrixCrystal::apply(long i, const Elem& b, bool is_f) const {
    if (b.size() != static_cast<size_t>(m_ * n_)) throw DomainError("bad matrix payload");
    auto bit = [&](long r, long c) { return b[static_cast<size_t>((r - 1) * n_ + (c - 1))]; };
    std::vector<std::pair<long, long>> word;
    if (i >= 1) {
        if (i > m_ - 1) throw DomainError("color out of range");
        // column word, columns left to right
        word.reserve(static_cast<size_t>(n_));
        for (long c = 1; c <= n_; ++c) {
            long top = bit(i, c), bot = bit(i + 1, c);
            word.push_back({top == 0 && bot == 1, top == 1 && bot == 0});
        }
        auto pos = is_f ? signature_f_index(word) : signature_e_index(word);
        if (!pos) return std::nullopt;
        long c = static_cast<long>(*pos) + 1;
        Elem r = b;
        r[static_cast<size_t>((i - 1) * n_ + (c - 1))] ^= 1;
        r[static_cast<size_t>(i * n_ + (c - 1))] ^= 1;
        return r;
    }
    long j = -i;
    if (j < 1 || j > n_ - 1) throw DomainError("color out of range");
    // row word, rows bottom to top
    word.reserve(static_cast<size_t>(m_));
    for (long r = m_; r >= 1; --r) {
        long left = bit(r, j), right = bit(r, j + 1);
        word.push_back({left == 0 && right == 1, left == 1 && right == 0});
    }
    auto pos = is_f ? signature_f_index(word) : signature_e_index(word);
    if (!pos) return std::nullopt;
    long r = m_ - static_cast<long>(*pos);
    Elem out = b;
    out[static_cast<size_t>((r - 1) * n_ + (j - 1))] ^= 1;
    out[static_cast<size_t>((r - 1) * n_ + j)] ^= 1;
    return out;
}

std::optional<Elem> MatrixCrystal::apply_f(long i, const Elem& b) const { return apply(i, b, true); }
std::optional<Elem> MatrixCrystal::apply_e(long i, const Elem& b) const { return apply(i, b, false); }

Weight MatrixCrystal::weight(const Elem& b) const {
    Weight w;
    for (long r = 1; r <= m_; ++r)
        for (long c = 1; c <= n_; ++c)
            if (b[static_cast<size_t>((r - 1) * n_ + (c - 1))]) {
                w[r] += 1;
                w[-c] += 1;
            }
    return w;
}

std::string MatrixCrystal::show(const Elem& b) const {
    std::string s;
    for (long r = 1; r <= m_; ++r) {
        if (r > 1) s += '/';
        for (long c = 1; c <= n_; ++c)
            s += static_cast<char>('0' + b[static_cast<size_t>((r - 1) * n_ + (c - 1))]);
    }
    return s;
}

std::shared_ptr<Crystal> matrix_crystal(long m, long n) {
    return std::make_shared<MatrixCrystal>(m, n);
}

std::vector<Elem> all_matrices(long m, long n) {
    if (m < 1 || n < 1) throw DomainError("matrix crystal needs m, n >= 1");
    long cells = m * n;
    if (cells > 24) throw BudgetError("matrix enumeration too large");
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(1) << cells);
    for (long mask = 0; mask < (1L << cells); ++mask) {
        Elem b(static_cast<size_t>(cells));
        for (long k = 0; k < cells; ++k) b[static_cast<size_t>(k)] = (mask >> k) & 1;
        out.push_back(std::move(b));
    }
    return out;
}

// ---- windowed highest matrices ----

Matrix01 highest_matrix(const std::vector<long>& lambda, long row_lo, long row_hi) {
    if (lambda.empty()) throw DomainError("empty column list");
    if (row_lo > row_hi) throw DomainError("empty row window");
    for (size_t j = 0; j + 1 < lambda.size(); ++j)
        if (lambda[j] < lambda[j + 1]) throw DomainError("lambda must be weakly decreasing");
    for (long v : lambda)
        if (v < row_lo - 1 || v > row_hi) throw DomainError("lambda does not fit the window");
    Matrix01 M;
    M.row_lo = row_lo;
    M.row_hi = row_hi;
    M.cols = static_cast<long>(lambda.size());
    M.bits.assign(static_cast<size_t>(M.height() * M.cols), 0);
    for (long i = row_lo; i <= row_hi; ++i)
        for (long j = 1; j <= M.cols; ++j)
            if (i <= lambda[static_cast<size_t>(j - 1)]) M.cell(i, j) = 1;
    return M;
}

Matrix01 highest_matrix_of_pair(const PartitionPair& mn, long n) {
    std::vector<long> lambda = lambda_of_pair(mn, n);
    if (lambda.empty()) throw DomainError("level must be positive");
    long lo = std::min(lambda.back(), 0L);
    long hi = std::max(lambda.front(), 1L);
    return highest_matrix(lambda, lo, hi);
}

std::pair<long, long> window_eps_phi(const Matrix01& M, long i) {
    std::vector<std::pair<long, long>> word;
    word.reserve(static_cast<size_t>(M.cols));
    for (long j = 1; j <= M.cols; ++j) {
        long top = M.at(i, j), bot = M.at(i + 1, j);
        word.push_back({top == 0 && bot == 1, top == 1 && bot == 0});
    }
    return fold_eps_phi(word);
}

std::vector<long> column_charges(const Matrix01& M) {
    std::vector<long> charges;
    for (long j = 1; j <= M.cols; ++j) {
        long ones_pos = std::max(M.row_lo - 1, 0L);
        long zeros_nonpos = std::max(-M.row_hi, 0L);
        for (long i = M.row_lo; i <= M.row_hi; ++i) {
            if (i >= 1 && M.at(i, j) == 1) ++ones_pos;
            if (i <= 0 && M.at(i, j) == 0) ++zeros_nonpos;
        }
        charges.push_back(ones_pos - zeros_nonpos);
    }
    return charges;
}

// ---- Howe decomposition ----

std::vector<std::pair<Partition, long>> howe_decompose(long m, long n) {
    MatrixCrystal c(m, n);
    auto comps = components(c, all_matrices(m, n));
    std::map<Partition, long> counts;
    for (const auto& comp : comps) {
        if (!comp.highest) throw std::runtime_error("matrix crystal component lacks a bi-highest element");
        const Elem& top = *comp.highest;
        std::vector<long> row_sums(static_cast<size_t>(m), 0);
        std::vector<long> col_sums(static_cast<size_t>(n), 0);
        for (long r = 1; r <= m; ++r)
            for (long cidx = 1; cidx <= n; ++cidx)
                if (top[static_cast<size_t>((r - 1) * n + (cidx - 1))]) {
                    ++row_sums[static_cast<size_t>(r - 1)];
                    ++col_sums[static_cast<size_t>(cidx - 1)];
                }
        while (!row_sums.empty() && row_sums.back() == 0) row_sums.pop_back();
        if (!is_partition(row_sums))
            throw std::runtime_error("bi-highest row sums are not a partition");
        while (!col_sums.empty() && col_sums.back() == 0) col_sums.pop_back();
        if (col_sums != conjugate(row_sums))
            throw std::runtime_error("bi-highest column sums differ from the conjugate label");
        counts[row_sums] += 1;
    }
    return {counts.begin(), counts.end()};
}

// ---- MatrixNat ----

long MatrixNat::at(long i, long j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void MatrixNat::add(long i, long j, long v) {
    if (i > -1 || j < 0) throw DomainError("vacuum crystal entries live on ZZ_{<0} x ZZ_{>=0}");
    long& slot = entries[{i, j}];
    slot += v;
    if (slot < 0) throw DomainError("negative entry in vacuum crystal matrix");
    if (slot == 0) entries.erase({i, j});
}

GlWeight MatrixNat::weight() const {
    GlWeight g;
    for (const auto& [key, v] : entries) {
        g.coords[key.second + 1] += v;
        g.coords[key.first + 1] -= v;
    }
    return g;
}

Elem MatrixNat::pack() const {
    Elem b;
    b.reserve(entries.size() * 3);
    for (const auto& [key, v] : entries) {
        b.push_back(key.first);
        b.push_back(key.second);
        b.push_back(v);
    }
    return b;
}

MatrixNat MatrixNat::unpack(const Elem& b) {
    if (b.size() % 3 != 0) throw DomainError("bad vacuum crystal payload");
    MatrixNat M;
    for (size_t k = 0; k < b.size(); k += 3) M.add(b[k], b[k + 1], b[k + 2]);
    return M;
}

std::string MatrixNat::str() const {
    if (entries.empty()) return "{}";
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [key, v] : entries) {
        if (!first) os << ',';
        first = false;
        os << '(' << key.first << ',' << key.second << "):" << v;
    }
    os << '}';
    return os.str();
}

// ---- BosonCrystal ----

BosonCrystal::BosonCrystal(long radius) : radius_(radius) {
    if (radius < 1) throw DomainError("boson crystal radius must be positive");
    for (long i = -radius; i <= radius; ++i) colors_.push_back(i);
}

std::optional<Elem> BosonCrystal::apply(long k, const Elem& b, bool is_f) const {
    MatrixNat M = MatrixNat::unpack(b);
    if (k == 0) {
        if (is_f) {
            M.add(-1, 0, 1);
            return M.pack();
        }
        if (M.at(-1, 0) == 0) return std::nullopt;
        M.add(-1, 0, -1);
        return M.pack();
    }
    if (k >= 1) {
        // rows as one-row gl_{>0} crystals, top row -1 first; letter k sits
        // in column k-1 and letter k+1 in column k
        std::set<long, std::greater<long>> rows;
        for (const auto& [key, v] : M.entries)
            if (key.second == k - 1 || key.second == k) rows.insert(key.first);
        std::vector<long> order(rows.begin(), rows.end());
        std::vector<std::pair<long, long>> word;
        word.reserve(order.size());
        for (long i : order) word.push_back({M.at(i, k), M.at(i, k - 1)});
        auto pos = is_f ? signature_f_index(word) : signature_e_index(word);
        if (!pos) return std::nullopt;
        long i = order[*pos];
        M.add(i, k - 1, is_f ? -1 : 1);
        M.add(i, k, is_f ? 1 : -1);
        return M.pack();
    }
    // k <= -1: columns as dual one-column gl_{<=0} crystals, left column 0
    // first; dual letter k sits in row k-1 and dual letter k+1 in row k
    std::set<long> cols;
    for (const auto& [key, v] : M.entries)
        if (key.first == k - 1 || key.first == k) cols.insert(key.second);
    std::vector<long> order(cols.begin(), cols.end());
    std::vector<std::pair<long, long>> word;
    word.reserve(order.size());
    for (long j : order) word.push_back({M.at(k - 1, j), M.at(k, j)});
    auto pos = is_f ? signature_f_index(word) : signature_e_index(word);
    if (!pos) return std::nullopt;
    long j = order[*pos];
    M.add(k, j, is_f ? -1 : 1);
    M.add(k - 1, j, is_f ? 1 : -1);
    return M.pack();
}

std::optional<Elem> BosonCrystal::apply_f(long i, const Elem& b) const { return apply(i, b, true); }
std::optional<Elem> BosonCrystal::apply_e(long i, const Elem& b) const { return apply(i, b, false); }

Weight BosonCrystal::weight(const Elem& b) const {
    return MatrixNat::unpack(b).weight().coords;
}

std::string BosonCrystal::show(const Elem& b) const { return MatrixNat::unpack(b).str(); }

std::shared_ptr<Crystal> boson_crystal(long radius) {
    return std::make_shared<BosonCrystal>(radius);
}

// ---- weight spaces and highest weight sets ----

bool boson_weight_ok(const GlWeight& g) {
    if (g.lambda0 != 0) return false;
    long total = 0;
    for (const auto& [i, c] : g.coords) {
        if (i > 0 && c < 0) return false;
        if (i <= 0 && c > 0) return false;
        total += c;
    }
    return total == 0;
}

namespace {

void fill_rows(const std::vector<std::pair<long, long>>& rows, size_t r,
               const std::vector<long>& col_index, std::vector<long>& col_rem,
               MatrixNat& current, std::vector<MatrixNat>& out) {
    if (r == rows.size()) {
        out.push_back(current);
        return;
    }
    auto [row, need] = rows[r];
    // distribute `need` units of this row across the columns
    std::vector<long> alloc(col_index.size(), 0);
    std::function<void(size_t, long)> place = [&](size_t c, long left) {
        if (c == col_index.size()) {
            if (left != 0) return;
            for (size_t t = 0; t < col_index.size(); ++t)
                if (alloc[t]) current.add(row, col_index[t], alloc[t]);
            fill_rows(rows, r + 1, col_index, col_rem, current, out);
            for (size_t t = 0; t < col_index.size(); ++t)
                if (alloc[t]) current.add(row, col_index[t], -alloc[t]);
            return;
        }
        long cap = std::min(left, col_rem[c]);
        for (long v = 0; v <= cap; ++v) {
            alloc[c] = v;
            col_rem[c] -= v;
            place(c + 1, left - v);
            col_rem[c] += v;
            alloc[c] = 0;
        }
    };
    place(0, need);
}

}  // namespace

std::vector<MatrixNat> boson_weight_space(const GlWeight& g, long support) {
    if (!boson_weight_ok(g)) throw DomainError("weight is not a vacuum module weight");
    // margins pinned by the weight: column j-1 sums to c_j for j >= 1,
    // row i-1 sums to -c_i for i <= 0
    std::vector<std::pair<long, long>> rows;  // (row index, row sum), top down
    std::vector<long> col_index, col_cap;
    for (auto it = g.coords.rbegin(); it != g.coords.rend(); ++it) {
        const auto& [i, c] = *it;
        if (i <= 0 && c < 0) rows.push_back({i - 1, -c});
    }
    for (const auto& [i, c] : g.coords)
        if (i >= 1 && c > 0) {
            col_index.push_back(i - 1);
            col_cap.push_back(c);
        }
    if (support > 0) {
        for (const auto& [row, sum] : rows)
            if (row < -support) throw DomainError("support bound truncates the weight space");
        for (long j : col_index)
            if (j > support - 1) throw DomainError("support bound truncates the weight space");
    }
    std::vector<MatrixNat> out;
    MatrixNat current;
    fill_rows(rows, 0, col_index, col_cap, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

GlWeight socle_weight(const PartitionPair& high, const PartitionPair& low) {
    GlWeight g = lambda_weight_of_pair(high) - lambda_weight_of_pair(low);
    g.lambda0 = 0;
    return g;
}

HSet h_set(const PartitionPair& mn, const GlWeight& g, long n) {
    std::vector<long> lambda = lambda_of_pair(mn, n);  // validates the level
    (void)lambda;
    HSet result;
    result.base = mn;
    result.level = n;
    result.wt = g;
    BosonCrystal c(1);
    for (const MatrixNat& b : boson_weight_space(g)) {
        long lo_color = 0, hi_color = 0;
        for (const auto& [key, v] : b.entries) {
            lo_color = std::min(lo_color, key.first + 1);
            hi_color = std::max(hi_color, key.second);
        }
        bool ok = true;
        Elem payload = b.pack();
        for (long i = lo_color; i <= hi_color && ok; ++i)
            if (epsilon(c, i, payload) > pairing_h_lambda(i, mn, n)) ok = false;
        if (ok) result.members.push_back(b);
    }
    return result;
}

}  // namespace crystalkit

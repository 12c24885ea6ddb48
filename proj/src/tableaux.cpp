// tableaux.cpp

#include "tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace crystalkit {

namespace {

// Letter string data for color i. Natural letter k (stored positive):
// phi = [k=i], eps = [k=i+1]. Dual letter kv (stored as -k): phi = [k=i+1],
// eps = [k=i].
std::pair<long, long> letter_eps_phi(long letter, long i) {
    if (letter > 0) return {letter == i + 1 ? 1 : 0, letter == i ? 1 : 0};
    long k = -letter;
    return {k == i ? 1 : 0, k == i + 1 ? 1 : 0};
}

long letter_f(long letter, long i) { return letter > 0 ? i + 1 : -i; }
long letter_e(long letter, long i) { return letter > 0 ? i : -(i + 1); }

std::vector<long> word_colors(long n) {
    std::vector<long> cs;
    for (long i = 1; i < n; ++i) cs.push_back(i);
    return cs;
}

// Apply f_i or e_i to a word of mixed letters via the signature rule,
// changing the payload through the position map.
std::optional<Elem> word_apply(const Elem& payload, const std::vector<size_t>& positions, long i,
                               bool is_f) {
    std::vector<std::pair<long, long>> sig;
    sig.reserve(positions.size());
    for (size_t p : positions) sig.push_back(letter_eps_phi(payload[p], i));
    std::optional<size_t> j = is_f ? signature_f_index(sig) : signature_e_index(sig);
    if (!j) return std::nullopt;
    Elem out = payload;
    long& cell = out[positions[*j]];
    cell = is_f ? letter_f(cell, i) : letter_e(cell, i);
    return out;
}

std::string rows_str(const Elem& b, const std::vector<size_t>& offsets, size_t total) {
    if (total == 0) return "()";
    std::ostringstream os;
    for (size_t r = 0; r + 1 < offsets.size(); ++r) {
        if (r) os << "/";
        size_t lo = offsets[r], hi = offsets[r + 1];
        for (size_t j = lo; j < hi; ++j) {
            if (j > lo) os << ",";
            os << b[j];
        }
    }
    return os.str();
}

}  // namespace

// ---- SSTCrystal ----

SSTCrystal::SSTCrystal(Partition mu, long n) : mu_(std::move(mu)), n_(n) {
    check_partition(mu_, "mu");
    if (n_ < 1) throw DomainError("alphabet size must be at least 1");
    offsets_.assign(mu_.size() + 1, 0);
    for (size_t r = 0; r < mu_.size(); ++r)
        offsets_[r + 1] = offsets_[r] + static_cast<size_t>(mu_[r]);
    long width = mu_.empty() ? 0 : mu_[0];
    Partition conj = conjugate(mu_);
    for (long c = width; c >= 1; --c)
        for (long r = 1; r <= conj[static_cast<size_t>(c - 1)]; ++r)
            colpos_.push_back(offsets_[static_cast<size_t>(r - 1)] + static_cast<size_t>(c - 1));
}

std::vector<long> SSTCrystal::colors() const { return word_colors(n_); }

std::optional<Elem> SSTCrystal::apply_f(long i, const Elem& b) const {
    return word_apply(b, colpos_, i, true);
}

std::optional<Elem> SSTCrystal::apply_e(long i, const Elem& b) const {
    return word_apply(b, colpos_, i, false);
}

Weight SSTCrystal::weight(const Elem& b) const {
    Weight w;
    for (long v : b) ++w[v];
    return w;
}

std::string SSTCrystal::show(const Elem& b) const {
    return rows_str(b, offsets_, offsets_.back());
}

bool SSTCrystal::valid(const Elem& b) const {
    if (b.size() != offsets_.back()) return false;
    for (size_t r = 0; r < mu_.size(); ++r)
        for (long c = 0; c < mu_[r]; ++c) {
            long v = b[offsets_[r] + static_cast<size_t>(c)];
            if (v < 1 || v > n_) return false;
            if (c > 0 && v < b[offsets_[r] + static_cast<size_t>(c - 1)]) return false;
            if (r > 0 && c < mu_[r - 1] && v <= b[offsets_[r - 1] + static_cast<size_t>(c)])
                return false;
        }
    return true;
}

Elem SSTCrystal::highest() const {
    Elem b;
    for (size_t r = 0; r < mu_.size(); ++r)
        b.insert(b.end(), static_cast<size_t>(mu_[r]), static_cast<long>(r + 1));
    return b;
}

std::vector<Elem> SSTCrystal::all_elements() const {
    std::vector<Elem> out;
    Elem cur(offsets_.back(), 0);
    // Fill row major; constraints look left and up only.
    std::function<void(size_t, long)> rec = [&](size_t r, long c) {
        if (r == mu_.size()) {
            out.push_back(cur);
            return;
        }
        if (c == mu_[r]) {
            rec(r + 1, 0);
            return;
        }
        size_t at = offsets_[r] + static_cast<size_t>(c);
        long lo = 1;
        if (c > 0) lo = std::max(lo, cur[at - 1]);
        if (r > 0 && c < mu_[r - 1]) lo = std::max(lo, cur[offsets_[r - 1] + static_cast<size_t>(c)] + 1);
        for (long v = lo; v <= n_; ++v) {
            cur[at] = v;
            rec(r, c + 1);
        }
        cur[at] = 0;
    };
    rec(0, 0);
    return out;
}

// ---- DualSSTCrystal ----

DualSSTCrystal::DualSSTCrystal(Partition nu, long n) : nu_(std::move(nu)), n_(n) {
    check_partition(nu_, "nu");
    if (n_ < 1) throw DomainError("alphabet size must be at least 1");
    size_t t = nu_.size();
    rows_.resize(t);
    for (size_t j = 0; j < t; ++j) rows_[j] = nu_[t - 1 - j];
    offsets_.assign(t + 1, 0);
    for (size_t j = 0; j < t; ++j) offsets_[j + 1] = offsets_[j] + static_cast<size_t>(rows_[j]);
    long width = nu_.empty() ? 0 : nu_[0];
    // Columns right to left; rows are right justified, so row j covers the
    // columns 1..rows_[j] counted from the right. Flat index of (row j,
    // column c from the right) is offsets_[j] + rows_[j] - c.
    for (long c = 1; c <= width; ++c)
        for (size_t j = 0; j < t; ++j)
            if (rows_[j] >= c) colpos_.push_back(offsets_[j] + static_cast<size_t>(rows_[j] - c));
    for (size_t i = 0; i < t; ++i) {
        size_t j = t - 1 - i;  // row i from the bottom
        rightcol_.push_back(offsets_[j] + static_cast<size_t>(rows_[j] - 1));
    }
}

std::vector<long> DualSSTCrystal::colors() const { return word_colors(n_); }

std::optional<Elem> DualSSTCrystal::apply_f(long i, const Elem& b) const {
    return word_apply(b, colpos_, i, true);
}

std::optional<Elem> DualSSTCrystal::apply_e(long i, const Elem& b) const {
    return word_apply(b, colpos_, i, false);
}

Weight DualSSTCrystal::weight(const Elem& b) const {
    Weight w;
    for (long v : b) {
        --w[-v];
        if (w[-v] == 0) w.erase(-v);
    }
    return w;
}

std::string DualSSTCrystal::show(const Elem& b) const {
    return rows_str(b, offsets_, offsets_.back());
}

bool DualSSTCrystal::valid(const Elem& b) const {
    if (b.size() != offsets_.back()) return false;
    size_t t = rows_.size();
    for (size_t j = 0; j < t; ++j)
        for (long c = 0; c < rows_[j]; ++c) {
            long v = -b[offsets_[j] + static_cast<size_t>(c)];
            if (v < 1 || v > n_) return false;
            // Dual order kv: rows weakly increase left to right means the
            // numeric values weakly decrease.
            if (c > 0 && v > -b[offsets_[j] + static_cast<size_t>(c - 1)]) return false;
            // Cell above: rows are right justified, row j-1 is shorter or
            // equal, aligned at the right edge.
            if (j > 0) {
                long c_right = rows_[j] - c;  // column index from the right
                if (rows_[j - 1] >= c_right) {
                    long above = -b[offsets_[j - 1] + static_cast<size_t>(rows_[j - 1] - c_right)];
                    if (v >= above) return false;  // strict increase downward in dual order
                }
            }
        }
    return true;
}

Elem DualSSTCrystal::highest() const {
    Elem b(offsets_.back(), 0);
    size_t t = rows_.size();
    for (size_t j = 0; j < t; ++j) {
        long from_bottom = static_cast<long>(t - j);
        for (long c = 0; c < rows_[j]; ++c) b[offsets_[j] + static_cast<size_t>(c)] = -from_bottom;
    }
    return b;
}

std::vector<Elem> DualSSTCrystal::all_elements() const {
    std::vector<Elem> out;
    Elem cur(offsets_.back(), 0);
    size_t t = rows_.size();
    std::function<void(size_t, long)> rec = [&](size_t j, long c) {
        if (j == t) {
            out.push_back(cur);
            return;
        }
        if (c == rows_[j]) {
            rec(j + 1, 0);
            return;
        }
        size_t at = offsets_[j] + static_cast<size_t>(c);
        long hi = n_;
        if (c > 0) hi = std::min(hi, -cur[at - 1]);
        if (j > 0) {
            long c_right = rows_[j] - c;
            if (rows_[j - 1] >= c_right)
                hi = std::min(hi, -cur[offsets_[j - 1] + static_cast<size_t>(rows_[j - 1] - c_right)] - 1);
        }
        for (long v = 1; v <= hi; ++v) {
            cur[at] = -v;
            rec(j, c + 1);
        }
        cur[at] = 0;
    };
    rec(0, 0);
    return out;
}

// ---- BiTabCrystal ----

BiTabCrystal::BiTabCrystal(Partition mu, Partition nu, long n)
    : sst_(std::move(mu), n), dual_(std::move(nu), n), n_(n) {
    long need = static_cast<long>(sst_.shape().size()) + static_cast<long>(dual_.shape().size());
    if (n_ < need)
        throw DomainError("bitableaux crystal needs N >= l(mu)+l(nu) = " + std::to_string(need));
    combined_ = sst_.column_positions();
    size_t slen = partition_size(sst_.shape());
    for (size_t p : dual_.column_positions()) combined_.push_back(slen + p);
}

std::vector<long> BiTabCrystal::colors() const { return word_colors(n_); }

Elem BiTabCrystal::pack(const Elem& s, const Elem& t) const {
    Elem b = s;
    b.insert(b.end(), t.begin(), t.end());
    return b;
}

std::pair<Elem, Elem> BiTabCrystal::unpack(const Elem& b) const {
    size_t slen = partition_size(sst_.shape());
    Elem s(b.begin(), b.begin() + static_cast<long>(slen));
    Elem t(b.begin() + static_cast<long>(slen), b.end());
    return {std::move(s), std::move(t)};
}

std::optional<Elem> BiTabCrystal::apply_f(long i, const Elem& b) const {
    return word_apply(b, combined_, i, true);
}

std::optional<Elem> BiTabCrystal::apply_e(long i, const Elem& b) const {
    return word_apply(b, combined_, i, false);
}

Weight BiTabCrystal::weight(const Elem& b) const {
    auto [s, t] = unpack(b);
    Weight w = sst_.weight(s);
    for (const auto& [k, v] : dual_.weight(t)) {
        w[k] += v;
        if (w[k] == 0) w.erase(k);
    }
    return w;
}

std::string BiTabCrystal::show(const Elem& b) const {
    auto [s, t] = unpack(b);
    return sst_.show(s) + "|" + dual_.show(t);
}

bool BiTabCrystal::condition2(const Elem& b) const {
    auto [s, t] = unpack(b);
    // First-column entries of S, top to bottom (strictly increasing).
    std::vector<long> scol;
    const Partition& mu = sst_.shape();
    size_t off = 0;
    for (size_t r = 0; r < mu.size(); ++r) {
        scol.push_back(s[off]);
        off += static_cast<size_t>(mu[r]);
    }
    // Values of the rightmost column of T, bottom row first.
    std::vector<long> tcol;
    for (size_t p : dual_.right_column_positions()) tcol.push_back(-t[p]);
    for (long k = 1; k <= n_; ++k) {
        long cs = static_cast<long>(std::count_if(scol.begin(), scol.end(),
                                                  [&](long v) { return v <= k; }));
        long ct = static_cast<long>(std::count_if(tcol.begin(), tcol.end(),
                                                  [&](long v) { return v <= k; }));
        if (cs + ct > k) return false;
    }
    return true;
}

std::vector<Elem> BiTabCrystal::all_elements() const {
    std::vector<Elem> out;
    for (const Elem& s : sst_.all_elements())
        for (const Elem& t : dual_.all_elements()) {
            Elem b = pack(s, t);
            if (condition2(b)) out.push_back(b);
        }
    return out;
}

// ---- isomorphism and multiplicities ----

bool verify_bitableaux_iso(const Partition& mu, const Partition& nu, long n) {
    BiTabCrystal bitab(mu, nu, n);
    auto dual = std::make_shared<DualSSTCrystal>(nu, n);
    auto sst = std::make_shared<SSTCrystal>(mu, n);
    TensorCrystal prod(dual, sst);
    Elem seed = TensorCrystal::pack(dual->highest(), sst->highest());
    auto prod_comps = components(prod, {seed});
    if (prod_comps.size() != 1) return false;
    const Component& target = prod_comps.front();
    std::vector<Elem> bitab_elems = bitab.all_elements();
    if (bitab_elems.size() != target.members.size()) return false;
    auto bitab_comps = components(bitab, bitab_elems);
    if (bitab_comps.size() != 1) return false;
    if (!bitab_comps.front().highest || !target.highest) return false;
    Elem a = *bitab_comps.front().highest;
    Elem b = *target.highest;
    if (bitab.weight(a) != prod.weight(b)) return false;
    // Parallel walk: crystal graphs have at most one f_i successor per node,
    // so matching the highest elements forces the whole correspondence.
    std::map<Elem, Elem> match{{a, b}};
    std::vector<Elem> queue{a};
    while (!queue.empty()) {
        Elem x = queue.back();
        queue.pop_back();
        const Elem& y = match.at(x);
        for (long i : bitab.colors()) {
            auto fx = bitab.apply_f(i, x);
            auto fy = prod.apply_f(i, y);
            if (fx.has_value() != fy.has_value()) return false;
            if (fx) {
                auto it = match.find(*fx);
                if (it == match.end()) {
                    match.emplace(*fx, *fy);
                    queue.push_back(*fx);
                } else if (it->second != *fy) {
                    return false;
                }
            }
            auto ex = bitab.apply_e(i, x);
            auto ey = prod.apply_e(i, y);
            if (ex.has_value() != ey.has_value()) return false;
        }
    }
    return match.size() == bitab_elems.size();
}

std::map<PartitionPair, long> bitab_tensor_multiplicities(const PartitionPair& a,
                                                          const PartitionPair& b, long n) {
    auto left = std::make_shared<BiTabCrystal>(a.plus, a.minus, n);
    auto right = std::make_shared<BiTabCrystal>(b.plus, b.minus, n);
    TensorCrystal t(left, right);
    std::vector<Elem> seeds;
    for (const Elem& x : left->all_elements())
        for (const Elem& y : right->all_elements()) seeds.push_back(TensorCrystal::pack(x, y));
    return decompose_multiplicities(t, seeds);
}

long stabilization_rank(const PartitionPair& a, const PartitionPair& b, long cap) {
    long start = static_cast<long>(a.plus.size() + a.minus.size());
    start = std::max(start, static_cast<long>(b.plus.size() + b.minus.size()));
    start = std::max(start, 1L);
    if (cap < start + 1) throw DomainError("stabilization cap below the smallest admissible rank");
    auto prev = bitab_tensor_multiplicities(a, b, start);
    for (long n = start; n < cap; ++n) {
        auto next = bitab_tensor_multiplicities(a, b, n + 1);
        if (next == prev) return n;
        prev = std::move(next);
    }
    throw DomainError("multiplicity tables did not stabilize by N = " + std::to_string(cap));
}

}  // namespace crystalkit

// partitions.cpp

#include "partitions.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace crystalkit {

GlWeight operator+(const GlWeight& a, const GlWeight& b) {
    GlWeight r = a;
    r.lambda0 += b.lambda0;
    for (const auto& [i, c] : b.coords) {
        r.coords[i] += c;
        if (r.coords[i] == 0) r.coords.erase(i);
    }
    return r;
}

GlWeight operator-(const GlWeight& a, const GlWeight& b) {
    GlWeight r = a;
    r.lambda0 -= b.lambda0;
    for (const auto& [i, c] : b.coords) {
        r.coords[i] -= c;
        if (r.coords[i] == 0) r.coords.erase(i);
    }
    return r;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

void check_partition(const Partition& p, const char* what) {
    if (!is_partition(p))
        throw DomainError(std::string(what) + " is not a partition: " + partition_str(p));
}

long partition_size(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition r;
    if (p.empty()) return r;
    r.assign(static_cast<size_t>(p[0]), 0);
    for (long x : p)
        for (long j = 0; j < x; ++j) ++r[static_cast<size_t>(j)];
    return r;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.size() > lambda.size()) return false;
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

namespace {

void partitions_of_rec(long k, long maxpart, Partition& cur, std::vector<Partition>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (long first = std::min(k, maxpart); first >= 1; --first) {
        cur.push_back(first);
        partitions_of_rec(k - first, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long k) {
    if (k < 0) throw DomainError("partitions_of negative integer");
    std::vector<Partition> out;
    Partition cur;
    partitions_of_rec(k, k, cur, out);
    if (k == 0) out = {Partition{}};
    return out;
}

namespace {

// Depth-first fill of the skew shape lambda/mu in reverse reading order
// (rows top to bottom, right to left within a row), counting fillings that
// are column-strict with content nu and lattice reverse reading word.
struct LrCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::vector<long>> entry;  // entry[r][c], 1-based values, 0 = empty
    std::vector<long> cnt;                 // cnt[v] = how many v placed so far

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n), cnt(n.size() + 2, 0) {
        entry.resize(l.size());
        for (size_t r = 0; r < l.size(); ++r)
            entry[r].assign(static_cast<size_t>(l[r]), 0);
    }

    long mu_at(size_t r) const { return r < mu.size() ? mu[r] : 0; }

    long count(size_t row, long col) {
        if (row == lambda.size()) return 1;
        if (col <= mu_at(row)) {
            size_t nrow = row + 1;
            long ncol = nrow < lambda.size() ? lambda[nrow] : 0;
            return count(nrow, ncol);
        }
        size_t c = static_cast<size_t>(col - 1);
        long hi = static_cast<long>(nu.size());
        // Row entries weakly increase, so scanning right to left the value is
        // bounded by the right neighbor.
        if (col < lambda[row]) hi = std::min(hi, entry[row][c + 1]);
        long lo = 1;
        // Columns strictly increase where the cell above lies in the shape.
        if (row > 0 && col <= lambda[row - 1] && col > mu_at(row - 1))
            lo = std::max(lo, entry[row - 1][c] + 1);
        long total = 0;
        for (long v = lo; v <= hi; ++v) {
            if (cnt[static_cast<size_t>(v)] >= nu[static_cast<size_t>(v - 1)]) continue;
            // Lattice condition on the running counts.
            if (v >= 2 && cnt[static_cast<size_t>(v)] + 1 > cnt[static_cast<size_t>(v - 1)])
                continue;
            entry[row][c] = v;
            ++cnt[static_cast<size_t>(v)];
            total += count(row, col - 1);
            --cnt[static_cast<size_t>(v)];
            entry[row][c] = 0;
        }
        return total;
    }
};

std::mutex lr_cache_mutex;
std::map<std::array<Partition, 3>, long> lr_cache;

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    check_partition(lambda, "lambda");
    check_partition(mu, "mu");
    check_partition(nu, "nu");
    if (partition_size(lambda) != partition_size(mu) + partition_size(nu)) return 0;
    if (!contains(lambda, mu)) return 0;
    if (nu.empty()) return 1;
    std::array<Partition, 3> key{lambda, mu, nu};
    {
        std::lock_guard<std::mutex> lock(lr_cache_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    LrCounter counter(lambda, mu, nu);
    long result = counter.count(0, lambda[0]);
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    lr_cache.emplace(std::move(key), result);
    return result;
}

bool pair_order_ge(const PartitionPair& a, const PartitionPair& b) {
    if (partition_size(a.plus) - partition_size(a.minus) !=
        partition_size(b.plus) - partition_size(b.minus))
        return false;
    return contains(a.plus, b.plus) && contains(a.minus, b.minus);
}

std::vector<long> lambda_of_pair(const PartitionPair& mn, long n) {
    long lm = static_cast<long>(mn.plus.size());
    long ln = static_cast<long>(mn.minus.size());
    if (n < lm + ln)
        throw DomainError("lambda_of_pair needs n >= l(mu)+l(nu), got n=" + std::to_string(n));
    std::vector<long> lambda(static_cast<size_t>(n), 0);
    for (long i = 0; i < lm; ++i) lambda[static_cast<size_t>(i)] = mn.plus[static_cast<size_t>(i)];
    for (long i = 0; i < ln; ++i)
        lambda[static_cast<size_t>(n - 1 - i)] = -mn.minus[static_cast<size_t>(i)];
    return lambda;
}

PartitionPair pair_of_dominant(const std::vector<long>& lambda) {
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) throw DomainError("weight vector is not weakly decreasing");
    PartitionPair r;
    for (long x : lambda)
        if (x > 0) r.plus.push_back(x);
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it)
        if (*it < 0) r.minus.push_back(-*it);
    return r;
}

long pairing_h_lambda(long i, const PartitionPair& mn, long n) {
    std::vector<long> lambda = lambda_of_pair(mn, n);
    long c = 0;
    for (long x : lambda)
        if (x == i) ++c;
    return c;
}

GlWeight lambda_weight_of_pair(const PartitionPair& mn) {
    GlWeight w;
    w.lambda0 = static_cast<long>(mn.plus.size()) + static_cast<long>(mn.minus.size());
    Partition mup = conjugate(mn.plus);
    Partition nup = conjugate(mn.minus);
    for (size_t i = 0; i < mup.size(); ++i) w.coords[static_cast<long>(i) + 1] = mup[i];
    for (size_t i = 0; i < nup.size(); ++i) {
        long coord = -nup[i];
        w.coords[-static_cast<long>(i)] = coord;
    }
    return w;
}

long h_pairing(long i, const GlWeight& w) {
    long v = w.coord(i) - w.coord(i + 1);
    if (i == 0) v += w.lambda0;
    return v;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) return p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw DomainError("empty entry in partition '" + text + "'");
        try {
            size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            p.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("bad partition entry '" + item + "'");
        }
    }
    check_partition(p, "parsed value");
    return p;
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

std::string pair_str(const PartitionPair& mn) {
    return "(" + partition_str(mn.plus) + "," + partition_str(mn.minus) + ")";
}

}  // namespace crystalkit

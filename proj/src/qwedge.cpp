// qwedge.cpp

#include "qwedge.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace crystalkit {

namespace {

void check_letters(long m, long n, const WedgeWord& w) {
    for (const auto& [a, b] : w)
        if (a < 1 || a > m || b < 1 || b > n)
            throw DomainError("letter outside [1..m] x [1..n]");
}

void accumulate_term(std::map<Elem, RatFun>& acc, const Elem& key, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = acc.find(key);
    if (it == acc.end()) {
        acc.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

using WordSum = std::map<WedgeWord, RatFun>;

void accumulate_word(WordSum& acc, const WedgeWord& w, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

std::map<std::pair<int, WedgeWord>, WordSum> straighten_memo;
std::mutex straighten_mutex;

// Rewrites the first (or last) out-of-order adjacent pair and recurses.
// Every rule either drops the word, swaps the pair, or replaces an
// antidiagonal pair by the matching diagonal pair, so each step lowers the
// diagonal reading of the cell multiset and the recursion terminates.
WordSum straighten_word(const WedgeWord& w, Strategy strategy, long depth) {
    if (depth > 5000) throw BudgetError("straightening recursion too deep");
    const long k = static_cast<long>(w.size());
    long pos = -1;
    if (strategy == Strategy::Leftmost) {
        for (long t = 0; t + 1 < k; ++t)
            if (!letter_lt(w[t], w[t + 1])) { pos = t; break; }
    } else {
        for (long t = k - 2; t >= 0; --t)
            if (!letter_lt(w[t], w[t + 1])) { pos = t; break; }
    }
    if (pos < 0) return {{w, RatFun(1)}};

    const auto memo_key = std::make_pair(static_cast<int>(strategy), w);
    {
        std::lock_guard<std::mutex> lock(straighten_mutex);
        auto it = straighten_memo.find(memo_key);
        if (it != straighten_memo.end()) return it->second;
    }

    const Letter x = w[static_cast<size_t>(pos)];
    const Letter y = w[static_cast<size_t>(pos) + 1];
    // x ^ y with x >= y rewrites by the two-letter relations:
    //   x = y                        -> 0
    //   same column, y below x      -> -q^-1 y ^ x
    //   same row, y left of x       -> q y ^ x
    //   y strictly northwest of x   -> y ^ x
    //   y strictly southwest of x   -> y ^ x + (q - q^-1) nw ^ se
    std::vector<std::pair<RatFun, std::pair<Letter, Letter>>> pieces;
    if (x != y) {
        if (x.second == y.second) {
            pieces.push_back({-rf_q(-1), {y, x}});
        } else if (x.first == y.first) {
            pieces.push_back({rf_q(1), {y, x}});
        } else if (y.first < x.first) {
            pieces.push_back({RatFun(1), {y, x}});
        } else {
            pieces.push_back({RatFun(1), {y, x}});
            pieces.push_back({rf_q(1) - rf_q(-1),
                              {{x.first, y.second}, {y.first, x.second}}});
        }
    }
    WordSum result;
    for (const auto& [coeff, pair2] : pieces) {
        WedgeWord w2 = w;
        w2[static_cast<size_t>(pos)] = pair2.first;
        w2[static_cast<size_t>(pos) + 1] = pair2.second;
        for (const auto& [sw, sc] : straighten_word(w2, strategy, depth + 1))
            accumulate_word(result, sw, coeff * sc);
    }
    {
        std::lock_guard<std::mutex> lock(straighten_mutex);
        straighten_memo.emplace(memo_key, result);
    }
    return result;
}

}  // namespace

// ---- words and keys ----

bool letter_lt(const Letter& x, const Letter& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.first > y.first;
}

bool word_is_standard(const WedgeWord& w) {
    for (size_t t = 0; t + 1 < w.size(); ++t)
        if (!letter_lt(w[t], w[t + 1])) return false;
    return true;
}

Elem word_to_key(long m, long n, const WedgeWord& w) {
    check_letters(m, n, w);
    if (!word_is_standard(w)) throw DomainError("word is not standard");
    Elem key(static_cast<size_t>(m * n), 0);
    for (const auto& [a, b] : w) key[static_cast<size_t>((a - 1) * n + (b - 1))] = 1;
    return key;
}

WedgeWord key_to_word(long m, long n, const Elem& key) {
    if (key.size() != static_cast<size_t>(m * n)) throw DomainError("bad monomial key size");
    WedgeWord w;
    for (long b = 1; b <= n; ++b)
        for (long a = m; a >= 1; --a) {
            long bit = key[static_cast<size_t>((a - 1) * n + (b - 1))];
            if (bit != 0 && bit != 1) throw DomainError("monomial key must be 0/1");
            if (bit) w.push_back({a, b});
        }
    return w;
}

std::vector<long> key_row_sums(long m, long n, const Elem& key) {
    std::vector<long> rs(static_cast<size_t>(m), 0);
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            rs[static_cast<size_t>(a - 1)] += key[static_cast<size_t>((a - 1) * n + (b - 1))];
    return rs;
}

std::vector<long> key_col_sums(long m, long n, const Elem& key) {
    std::vector<long> cs(static_cast<size_t>(n), 0);
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            cs[static_cast<size_t>(b - 1)] += key[static_cast<size_t>((a - 1) * n + (b - 1))];
    return cs;
}

std::vector<long> c_vector(long m, long n, const Elem& key) {
    std::vector<long> c;
    c.reserve(static_cast<size_t>(m + n - 1));
    for (long i = 1 - n; i <= m - 1; ++i) {
        long s = 0;
        for (long b = 1; b <= n; ++b) {
            long a = i + b;
            if (a >= 1 && a <= m) s += key[static_cast<size_t>((a - 1) * n + (b - 1))];
        }
        c.push_back(s);
    }
    return c;
}

bool c_lex_less(long m, long n, const Elem& a, const Elem& b) {
    auto ca = c_vector(m, n, a);
    auto cb = c_vector(m, n, b);
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

// ---- elements ----

std::string WedgeElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*w[";
        bool fl = true;
        for (const auto& [a, b] : key_to_word(m, n, key)) {
            if (!fl) os << ",";
            fl = false;
            os << "(" << a << "," << b << ")";
        }
        os << "]";
    }
    return os.str();
}

WedgeElement wedge_zero(long m, long n) {
    if (m < 1 || n < 1) throw DomainError("wedge algebra needs m, n >= 1");
    WedgeElement x;
    x.m = m;
    x.n = n;
    return x;
}

WedgeElement wedge_unit(long m, long n) {
    WedgeElement x = wedge_zero(m, n);
    x.terms.emplace(Elem(static_cast<size_t>(m * n), 0), RatFun(1));
    return x;
}

WedgeElement wedge_monomial(long m, long n, const Elem& key) {
    WedgeElement x = wedge_zero(m, n);
    key_to_word(m, n, key);  // validates size and 0/1 entries
    x.terms.emplace(key, RatFun(1));
    return x;
}

WedgeElement add(const WedgeElement& x, const WedgeElement& y) {
    if (x.m != y.m || x.n != y.n) throw DomainError("wedge size mismatch");
    WedgeElement out = x;
    for (const auto& [key, c] : y.terms) accumulate_term(out.terms, key, c);
    return out;
}

WedgeElement scale(const RatFun& c, const WedgeElement& x) {
    WedgeElement out = wedge_zero(x.m, x.n);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : x.terms) out.terms.emplace(key, c * v);
    return out;
}

WedgeElement straighten(long m, long n, const WedgeWord& w, Strategy strategy) {
    check_letters(m, n, w);
    WedgeElement out = wedge_zero(m, n);
    for (const auto& [sw, sc] : straighten_word(w, strategy, 0))
        accumulate_term(out.terms, word_to_key(m, n, sw), sc);
    return out;
}

WedgeElement wedge(const WedgeElement& x, const WedgeElement& y) {
    if (x.m != y.m || x.n != y.n) throw DomainError("wedge size mismatch");
    WedgeElement out = wedge_zero(x.m, x.n);
    for (const auto& [kx, cx] : x.terms) {
        WedgeWord wx = key_to_word(x.m, x.n, kx);
        for (const auto& [ky, cy] : y.terms) {
            WedgeWord cat = wx;
            for (const auto& l : key_to_word(x.m, x.n, ky)) cat.push_back(l);
            RatFun c = cx * cy;
            for (const auto& [sw, sc] : straighten_word(cat, Strategy::Leftmost, 0))
                accumulate_term(out.terms, word_to_key(x.m, x.n, sw), c * sc);
        }
    }
    return out;
}

// ---- generator actions ----

namespace {

void check_color(Side side, Gen g, long index, long m, long n) {
    long rank = (side == Side::Q) ? m : n;
    long hi = (g == Gen::E || g == Gen::F) ? rank - 1 : rank;
    if (index < 1 || index > hi) throw DomainError("generator index out of range");
}

}  // namespace

WedgeElement act(Side side, Gen g, long index, const WedgeElement& x) {
    const long m = x.m, n = x.n;
    check_color(side, g, index, m, n);
    WedgeElement out = wedge_zero(m, n);
    for (const auto& [key, c] : x.terms) {
        auto bit = [&](long a, long b) {
            return key[static_cast<size_t>((a - 1) * n + (b - 1))];
        };
        if (g == Gen::Kdiag || g == Gen::KdiagInv) {
            long s = 0;
            if (side == Side::Q)
                for (long b = 1; b <= n; ++b) s += bit(index, b);
            else
                for (long a = 1; a <= m; ++a) s += bit(a, index);
            if (g == Gen::KdiagInv) s = -s;
            RatFun coeff = (side == Side::Q) ? rf_q(static_cast<int>(s)) : p_power(s);
            accumulate_term(out.terms, key, c * coeff);
            continue;
        }
        if (side == Side::Q) {
            const long i = index;
            if (g == Gen::F) {
                // t_i on the columns left of the moving one
                long run = 0;
                for (long t = 1; t <= n; ++t) {
                    if (bit(i, t) == 1 && bit(i + 1, t) == 0) {
                        Elem k2 = key;
                        k2[static_cast<size_t>((i - 1) * n + (t - 1))] = 0;
                        k2[static_cast<size_t>(i * n + (t - 1))] = 1;
                        accumulate_term(out.terms, k2, c * rf_q(static_cast<int>(run)));
                    }
                    run += bit(i, t) - bit(i + 1, t);
                }
            } else {
                // t_i^-1 on the columns right of the moving one
                long run = 0;
                for (long t = n; t >= 1; --t) {
                    if (bit(i + 1, t) == 1 && bit(i, t) == 0) {
                        Elem k2 = key;
                        k2[static_cast<size_t>(i * n + (t - 1))] = 0;
                        k2[static_cast<size_t>((i - 1) * n + (t - 1))] = 1;
                        accumulate_term(out.terms, k2, c * rf_q(static_cast<int>(-run)));
                    }
                    run += bit(i, t) - bit(i + 1, t);
                }
            }
        } else {
            const long j = index;
            if (g == Gen::F) {
                // row factors run bottom to top, so t_j lands on rows above
                long run = 0;
                for (long r = 1; r <= m; ++r) {
                    if (bit(r, j) == 1 && bit(r, j + 1) == 0) {
                        Elem k2 = key;
                        k2[static_cast<size_t>((r - 1) * n + (j - 1))] = 0;
                        k2[static_cast<size_t>((r - 1) * n + j)] = 1;
                        accumulate_term(out.terms, k2, c * p_power(run));
                    }
                    run += bit(r, j) - bit(r, j + 1);
                }
            } else {
                long run = 0;
                for (long r = m; r >= 1; --r) {
                    if (bit(r, j + 1) == 1 && bit(r, j) == 0) {
                        Elem k2 = key;
                        k2[static_cast<size_t>((r - 1) * n + j)] = 0;
                        k2[static_cast<size_t>((r - 1) * n + (j - 1))] = 1;
                        accumulate_term(out.terms, k2, c * p_power(-run));
                    }
                    run += bit(r, j) - bit(r, j + 1);
                }
            }
        }
    }
    return out;
}

std::map<WedgeWord, RatFun> act_tensor_word(Side side, Gen g, long index,
                                            const WedgeWord& w) {
    if (index < 1) throw DomainError("generator index out of range");
    const long k = static_cast<long>(w.size());
    auto letter_h = [&](const Letter& l) {
        long v = (side == Side::Q) ? l.first : l.second;
        return (v == index ? 1L : 0L) - (v == index + 1 ? 1L : 0L);
    };
    WordSum out;
    if (g == Gen::Kdiag || g == Gen::KdiagInv) {
        long s = 0;
        for (const auto& l : w) {
            long v = (side == Side::Q) ? l.first : l.second;
            if (v == index) ++s;
        }
        if (g == Gen::KdiagInv) s = -s;
        RatFun coeff = (side == Side::Q) ? rf_q(static_cast<int>(s)) : p_power(s);
        accumulate_word(out, w, coeff);
        return out;
    }
    for (long t = 0; t < k; ++t) {
        const Letter& l = w[static_cast<size_t>(t)];
        long v = (side == Side::Q) ? l.first : l.second;
        long want = (g == Gen::F) ? index : index + 1;
        if (v != want) continue;
        long e = 0;
        if (side == Side::Q && g == Gen::F) {
            for (long s = 0; s < t; ++s) e += letter_h(w[static_cast<size_t>(s)]);
        } else if (side == Side::Q) {
            for (long s = t + 1; s < k; ++s) e -= letter_h(w[static_cast<size_t>(s)]);
        } else if (g == Gen::F) {
            for (long s = t + 1; s < k; ++s) e += letter_h(w[static_cast<size_t>(s)]);
        } else {
            for (long s = 0; s < t; ++s) e -= letter_h(w[static_cast<size_t>(s)]);
        }
        WedgeWord w2 = w;
        if (side == Side::Q)
            w2[static_cast<size_t>(t)].first = (g == Gen::F) ? index + 1 : index;
        else
            w2[static_cast<size_t>(t)].second = (g == Gen::F) ? index + 1 : index;
        RatFun coeff = (side == Side::Q) ? rf_q(static_cast<int>(e)) : p_power(e);
        accumulate_word(out, w2, coeff);
    }
    return out;
}

RatFun pairing(const WedgeElement& x, const WedgeElement& y) {
    if (x.m != y.m || x.n != y.n) throw DomainError("wedge size mismatch");
    RatFun s;
    for (const auto& [key, c] : x.terms) {
        auto it = y.terms.find(key);
        if (it != y.terms.end()) s += c * it->second;
    }
    return s;
}

WedgeElement bar(const WedgeElement& x) {
    WedgeElement out = wedge_zero(x.m, x.n);
    for (const auto& [key, c] : x.terms) {
        WedgeWord w = key_to_word(x.m, x.n, key);
        // l(w_c) and l(w_d): inversions of the longest permutations fixing
        // the row tuple and the column tuple
        long lc = 0, ld = 0;
        for (long v : key_row_sums(x.m, x.n, key)) lc += v * (v - 1) / 2;
        for (long v : key_col_sums(x.m, x.n, key)) ld += v * (v - 1) / 2;
        RatFun pre = rf_q(static_cast<int>(-lc)) * p_power(-ld) * c.bar();
        std::reverse(w.begin(), w.end());
        for (const auto& [sw, sc] : straighten_word(w, Strategy::Leftmost, 0))
            accumulate_term(out.terms, word_to_key(x.m, x.n, sw), pre * sc);
    }
    return out;
}

// ---- canonical basis ----

std::vector<Elem> biweight_space(long m, long n, const std::vector<long>& row_sums,
                                 const std::vector<long>& col_sums) {
    if (m < 1 || n < 1) throw DomainError("wedge algebra needs m, n >= 1");
    if (static_cast<long>(row_sums.size()) != m || static_cast<long>(col_sums.size()) != n)
        throw DomainError("margin length mismatch");
    long total_r = 0, total_c = 0;
    for (long v : row_sums) {
        if (v < 0 || v > n) throw DomainError("row sum out of range");
        total_r += v;
    }
    for (long v : col_sums) {
        if (v < 0 || v > m) throw DomainError("column sum out of range");
        total_c += v;
    }
    if (total_r != total_c) throw DomainError("margins disagree");

    std::vector<Elem> out;
    Elem cur(static_cast<size_t>(m * n), 0);
    std::vector<long> rem(col_sums);
    std::function<void(long)> fill_row = [&](long r) {
        if (r == m) {
            out.push_back(cur);
            if (out.size() > static_cast<size_t>(element_budget()))
                throw BudgetError("bi-weight space exceeds the element budget");
            return;
        }
        for (long j = 0; j < n; ++j)
            if (rem[static_cast<size_t>(j)] > m - r) return;
        std::function<void(long, long)> place = [&](long col, long need) {
            if (need == 0) {
                fill_row(r + 1);
                return;
            }
            if (col > n || n - col + 1 < need) return;
            place(col + 1, need);
            if (rem[static_cast<size_t>(col - 1)] > 0) {
                rem[static_cast<size_t>(col - 1)]--;
                cur[static_cast<size_t>(r * n + col - 1)] = 1;
                place(col + 1, need - 1);
                rem[static_cast<size_t>(col - 1)]++;
                cur[static_cast<size_t>(r * n + col - 1)] = 0;
            }
        };
        place(1, row_sums[static_cast<size_t>(r)]);
    };
    fill_row(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Elem, WedgeElement>> canonical_basis(
    long m, long n, const std::vector<long>& row_sums,
    const std::vector<long>& col_sums) {
    std::vector<Elem> keys = biweight_space(m, n, row_sums, col_sums);
    std::sort(keys.begin(), keys.end(), [&](const Elem& a, const Elem& b) {
        if (c_lex_less(m, n, a, b)) return true;
        if (c_lex_less(m, n, b, a)) return false;
        return a < b;
    });
    std::vector<std::pair<Elem, WedgeElement>> out;
    for (const Elem& M : keys) {
        WedgeElement G = wedge_monomial(m, n, M);
        for (long iter = 0;; ++iter) {
            if (iter > 10000) throw BudgetError("canonical basis recursion did not settle");
            WedgeElement D = add(bar(G), scale(RatFun(-1), G));
            if (D.is_zero()) break;
            const Elem* best = nullptr;
            for (const auto& [N, r] : D.terms) {
                if (!best) {
                    best = &N;
                    continue;
                }
                if (c_lex_less(m, n, *best, N) ||
                    (!c_lex_less(m, n, N, *best) && *best < N))
                    best = &N;
            }
            const Elem N = *best;
            const RatFun r = D.terms.at(N);
            if (!c_lex_less(m, n, N, M))
                throw DomainError("bar defect is not triangular");
            if (!r.is_laurent() || !(r.bar() == -r))
                throw DomainError("bar defect coefficient is not antisymmetric");
            LaurentPoly cpos;
            for (const auto& [e, cf] : r.as_laurent().coeffs())
                if (e > 0) cpos += LaurentPoly::monomial(cf, e);
            if (cpos.is_zero())
                throw DomainError("bar defect has no positive part");
            G = add(G, scale(RatFun(cpos), wedge_monomial(m, n, N)));
        }
        for (const auto& [N, cf] : G.terms) {
            if (N == M) {
                if (!cf.is_one()) throw DomainError("canonical leading coefficient is not 1");
                continue;
            }
            if (!cf.is_laurent() || cf.as_laurent().min_exp() < 1)
                throw DomainError("canonical coefficient lies outside q ZZ[q]");
        }
        out.push_back({M, G});
    }
    return out;
}

// ---- crystal operators ----

namespace {

void check_biweight(const WedgeElement& x) {
    auto it = x.terms.begin();
    auto rs = key_row_sums(x.m, x.n, it->first);
    auto cs = key_col_sums(x.m, x.n, it->first);
    for (++it; it != x.terms.end(); ++it)
        if (key_row_sums(x.m, x.n, it->first) != rs ||
            key_col_sums(x.m, x.n, it->first) != cs)
            throw DomainError("crystal operators need a bi-weight vector");
}

long cartan_of(Side side, long i, const WedgeElement& x) {
    const Elem& key = x.terms.begin()->first;
    if (side == Side::Q) {
        auto rs = key_row_sums(x.m, x.n, key);
        return rs[static_cast<size_t>(i - 1)] - rs[static_cast<size_t>(i)];
    }
    auto cs = key_col_sums(x.m, x.n, key);
    return cs[static_cast<size_t>(i - 1)] - cs[static_cast<size_t>(i)];
}

// On side P the parameter of the acting quantum group evaluates on scalars
// as -q, so every structure constant is the q-side one at -q.
RatFun side_scalar(Side side, const LaurentPoly& c) {
    return RatFun(side == Side::P ? c.subst_neg_q() : c);
}

RatFun side_power(Side side, long e) {
    RatFun r = rf_q(static_cast<int>(e));
    return side == Side::P ? r.subst_neg_q() : r;
}

WedgeElement apply_divided(Side side, Gen g, long i, long k, WedgeElement v) {
    for (long t = 0; t < k; ++t) v = act(side, g, i, v);
    if (k >= 2) v = scale(side_scalar(side, qfact(k)).inverse(), v);
    return v;
}

struct StringDecomp {
    long h = 0;
    std::vector<std::pair<long, WedgeElement>> pieces;  // (k, v_k), e v_k = 0
};

StringDecomp string_decompose(Side side, long i, const WedgeElement& x) {
    StringDecomp sd;
    sd.h = cartan_of(side, i, x);
    WedgeElement rem = x;
    const long cap = x.m * x.n + 1;
    long prev = cap;
    while (!rem.is_zero()) {
        long len = 0;
        WedgeElement top = rem;
        while (true) {
            WedgeElement up = act(side, Gen::E, i, top);
            if (up.is_zero()) break;
            top = up;
            ++len;
            if (len > cap) throw DomainError("string length exceeds the degree");
        }
        if (len >= prev) throw DomainError("string decomposition failed to descend");
        prev = len;
        const long l = sd.h + 2 * len;
        if (l < len) throw DomainError("string outside the integrable range");
        RatFun denom = side_scalar(side, qbinom(l, len));
        if (denom.is_zero()) throw DomainError("vanishing q-binomial in string decomposition");
        WedgeElement v = scale((side_scalar(side, qfact(len)) * denom).inverse(), top);
        sd.pieces.push_back({len, v});
        rem = add(rem, scale(RatFun(-1), apply_divided(side, Gen::F, i, len, v)));
    }
    return sd;
}

}  // namespace

WedgeElement rep_tilde_f(Side side, Variant v, long index, const WedgeElement& x) {
    check_color(side, Gen::F, index, x.m, x.n);
    if (x.is_zero()) return x;
    check_biweight(x);
    StringDecomp sd = string_decompose(side, index, x);
    WedgeElement out = wedge_zero(x.m, x.n);
    for (const auto& [k, vk] : sd.pieces) {
        WedgeElement term = apply_divided(side, Gen::F, index, k + 1, vk);
        if (v == Variant::Upper) {
            long lk = sd.h + 2 * k;
            term = scale(side_power(side, lk - 2 * k - 1), term);
        }
        out = add(out, term);
    }
    return out;
}

WedgeElement rep_tilde_e(Side side, Variant v, long index, const WedgeElement& x) {
    check_color(side, Gen::E, index, x.m, x.n);
    if (x.is_zero()) return x;
    check_biweight(x);
    StringDecomp sd = string_decompose(side, index, x);
    WedgeElement out = wedge_zero(x.m, x.n);
    for (const auto& [k, vk] : sd.pieces) {
        if (k < 1) continue;
        WedgeElement term = apply_divided(side, Gen::F, index, k - 1, vk);
        if (v == Variant::Upper) {
            long lk = sd.h + 2 * k;
            term = scale(side_power(side, -lk + 2 * k - 1), term);
        }
        out = add(out, term);
    }
    return out;
}

}  // namespace crystalkit

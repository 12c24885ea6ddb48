// charalg.cpp

#include "charalg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace crystalkit {

namespace {

void check_word(const CharWord& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].sign != 1 && w[i].sign != -1) {
            throw DomainError("charalg: factor sign must be +1 or -1");
        }
        if (w[i].deg < 1) {
            throw DomainError("charalg: factor degree must be at least 1");
        }
        if (i > 0 && w[i].family != w[0].family) {
            throw DomainError("charalg: mixed generator families in one word");
        }
    }
}

// Sorts the minus and plus blocks of an adjacency-free word.
CharWord canonical_normal(const CharWord& w) {
    Partition nu, mu;
    Family fam = w.empty() ? Family::H : w[0].family;
    for (const auto& f : w) {
        (f.sign < 0 ? nu : mu).push_back(f.deg);
    }
    std::sort(nu.begin(), nu.end(), std::greater<long>());
    std::sort(mu.begin(), mu.end(), std::greater<long>());
    return normal_word(fam, nu, mu);
}

std::map<std::pair<int, CharWord>, std::map<CharWord, long>> order_memo;
std::mutex order_mutex;

std::map<CharWord, long> normal_order_core(const CharWord& w, Strategy strategy) {
    long pos = -1;
    if (strategy == Strategy::Leftmost) {
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].sign > 0 && w[i + 1].sign < 0) {
                pos = static_cast<long>(i);
                break;
            }
        }
    } else {
        for (size_t i = w.size(); i >= 2; --i) {
            if (w[i - 2].sign > 0 && w[i - 1].sign < 0) {
                pos = static_cast<long>(i - 2);
                break;
            }
        }
    }
    if (pos < 0) {
        return {{canonical_normal(w), 1}};
    }

    auto memo_key = std::make_pair(static_cast<int>(strategy), w);
    {
        std::lock_guard<std::mutex> lock(order_mutex);
        auto it = order_memo.find(memo_key);
        if (it != order_memo.end()) {
            return it->second;
        }
    }

    const long r = w[pos].deg;
    const long s = w[pos + 1].deg;
    const Family fam = w[pos].family;
    std::map<CharWord, long> out;
    for (long t = 0; t <= std::min(r, s); ++t) {
        CharWord next(w.begin(), w.begin() + pos);
        if (s - t >= 1) next.push_back({-1, fam, s - t});
        if (r - t >= 1) next.push_back({+1, fam, r - t});
        next.insert(next.end(), w.begin() + pos + 2, w.end());
        for (const auto& [nw, c] : normal_order_core(next, strategy)) {
            out[nw] += c;
        }
        if (out.size() > static_cast<size_t>(element_budget())) {
            throw BudgetError("charalg: normal order exceeded the element budget");
        }
    }

    std::lock_guard<std::mutex> lock(order_mutex);
    order_memo.emplace(std::move(memo_key), out);
    return out;
}

// ---- coefficient traits shared by Rat and TruncPoly elements ----

bool coeff_zero(const Rat& c) { return c == 0; }
bool coeff_zero(const TruncPoly& c) { return c.is_zero(); }
Rat coeff_add(const Rat& a, const Rat& b) { return a + b; }
TruncPoly coeff_add(const TruncPoly& a, const TruncPoly& b) { return tp_add(a, b); }
Rat coeff_mul(const Rat& a, const Rat& b) { return a * b; }
TruncPoly coeff_mul(const TruncPoly& a, const TruncPoly& b) { return tp_mul(a, b); }
Rat coeff_scale_long(const Rat& c, long k) { return c * k; }
TruncPoly coeff_scale_long(const TruncPoly& c, long k) { return tp_scale(Rat(k), c); }

template <class Coeff>
void accumulate(std::map<CharWord, Coeff>& terms, const CharWord& w, const Coeff& c) {
    if (coeff_zero(c)) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second = coeff_add(it->second, c);
    if (coeff_zero(it->second)) terms.erase(it);
}

template <class Coeff>
CharElementT<Coeff> add_impl(const CharElementT<Coeff>& x, const CharElementT<Coeff>& y) {
    CharElementT<Coeff> out = x;
    for (const auto& [w, c] : y.terms) accumulate(out.terms, w, c);
    return out;
}

template <class Coeff>
CharElementT<Coeff> mul_impl(const CharElementT<Coeff>& x, const CharElementT<Coeff>& y,
                             Strategy strategy) {
    CharElementT<Coeff> out;
    for (const auto& [wx, cx] : x.terms) {
        for (const auto& [wy, cy] : y.terms) {
            Coeff c = coeff_mul(cx, cy);
            if (coeff_zero(c)) continue;
            CharWord w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            check_word(w);
            for (const auto& [nw, mult] : normal_order_core(w, strategy)) {
                accumulate(out.terms, nw, coeff_scale_long(c, mult));
            }
            if (out.terms.size() > static_cast<size_t>(element_budget())) {
                throw BudgetError("charalg: product exceeded the element budget");
            }
        }
    }
    return out;
}

}  // namespace

// ---- words ----

bool word_is_normal(const CharWord& w) {
    check_word(w);
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].sign > 0 && w[i + 1].sign < 0) return false;
        if (w[i].sign == w[i + 1].sign && w[i].deg < w[i + 1].deg) return false;
    }
    return true;
}

CharWord normal_word(Family family, const Partition& nu, const Partition& mu) {
    check_partition(nu, "normal_word minus block");
    check_partition(mu, "normal_word plus block");
    CharWord w;
    w.reserve(nu.size() + mu.size());
    for (long d : nu) w.push_back({-1, family, d});
    for (long d : mu) w.push_back({+1, family, d});
    return w;
}

std::pair<Partition, Partition> word_partitions(const CharWord& w) {
    if (!word_is_normal(w)) {
        throw DomainError("charalg: word is not normal ordered");
    }
    Partition nu, mu;
    for (const auto& f : w) (f.sign < 0 ? nu : mu).push_back(f.deg);
    return {nu, mu};
}

std::string word_str(const CharWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << (w[i].family == Family::H ? 'h' : 'e') << (w[i].sign > 0 ? '+' : '-')
           << w[i].deg;
    }
    return os.str();
}

// ---- elements ----

std::map<CharWord, long> normal_order_word(const CharWord& w, Strategy strategy) {
    check_word(w);
    return normal_order_core(w, strategy);
}

CharElement normal_order(const CharWord& w, Strategy strategy) {
    CharElement out;
    for (const auto& [nw, c] : normal_order_word(w, strategy)) {
        out.terms.emplace(nw, Rat(c));
    }
    return out;
}

CharElement char_zero() { return {}; }

CharElement char_unit() { return char_monomial({}); }

CharElement char_monomial(const CharWord& w) {
    if (!word_is_normal(w)) {
        throw DomainError("charalg: monomial word is not normal ordered");
    }
    CharElement out;
    out.terms.emplace(w, Rat(1));
    return out;
}

CharElement add(const CharElement& x, const CharElement& y) { return add_impl(x, y); }

CharElement scale(const Rat& c, const CharElement& x) {
    CharElement out;
    if (c == 0) return out;
    for (const auto& [w, v] : x.terms) out.terms.emplace(w, c * v);
    return out;
}

CharElement mul(const CharElement& x, const CharElement& y, Strategy strategy) {
    return mul_impl(x, y, strategy);
}

std::string char_str(const CharElement& x) {
    if (x.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x.terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || w.empty()) {
            os << c.str();
            if (!w.empty()) os << '*';
        }
        if (!w.empty()) os << word_str(w);
    }
    return os.str();
}

// ---- Schur elements and transition coefficients ----

CharElement schur(int sign, Family family, const Partition& lam) {
    if (sign != 1 && sign != -1) {
        throw DomainError("charalg: schur sign must be +1 or -1");
    }
    check_partition(lam, "schur");
    const Partition rows = family == Family::H ? lam : conjugate(lam);
    const long l = static_cast<long>(rows.size());
    if (l == 0) return char_unit();

    CharElement out;
    std::vector<long> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        long inversions = 0;
        for (long i = 0; i < l; ++i) {
            for (long j = i + 1; j < l; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        Partition degs;
        bool dead = false;
        for (long i = 0; i < l && !dead; ++i) {
            long d = rows[i] - i + perm[i];
            if (d < 0) dead = true;
            if (d > 0) degs.push_back(d);
        }
        if (dead) continue;
        std::sort(degs.begin(), degs.end(), std::greater<long>());
        CharWord w = sign > 0 ? normal_word(family, {}, degs) : normal_word(family, degs, {});
        accumulate(out.terms, w, Rat(inversions % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

long m_coeff(const Partition& mu, const Partition& nu,
             const Partition& zeta, const Partition& eta) {
    check_partition(mu, "m_coeff");
    check_partition(nu, "m_coeff");
    check_partition(zeta, "m_coeff");
    check_partition(eta, "m_coeff");
    const long s = partition_size(mu) - partition_size(zeta);
    if (s < 0 || s != partition_size(nu) - partition_size(eta)) return 0;
    long total = 0;
    for (const Partition& sigma : partitions_of(s)) {
        long a = lr_coefficient(mu, sigma, zeta);
        if (a == 0) continue;
        total += a * lr_coefficient(nu, sigma, eta);
    }
    return total;
}

long n_coeff(const Partition& sigma, const Partition& tau,
             const Partition& mu, const Partition& nu) {
    check_partition(sigma, "n_coeff");
    check_partition(tau, "n_coeff");
    check_partition(mu, "n_coeff");
    check_partition(nu, "n_coeff");
    const long s = partition_size(sigma) - partition_size(mu);
    if (s < 0 || s != partition_size(tau) - partition_size(nu)) return 0;
    long total = 0;
    for (const Partition& lam : partitions_of(s)) {
        long a = lr_coefficient(sigma, lam, mu);
        if (a == 0) continue;
        total += a * lr_coefficient(tau, conjugate(lam), nu);
    }
    return s % 2 ? -total : total;
}

bool verify_transition_inverse(long degree) {
    if (degree < 0) throw DomainError("charalg: degree must be nonnegative");
    std::vector<PartitionPair> index;
    for (long a = 0; a <= degree; ++a) {
        for (const Partition& mu : partitions_of(a)) {
            for (long b = 0; b <= degree; ++b) {
                for (const Partition& nu : partitions_of(b)) {
                    index.push_back({mu, nu});
                }
            }
        }
    }
    const size_t dim = index.size();
    std::vector<std::vector<long>> mm(dim, std::vector<long>(dim));
    std::vector<std::vector<long>> nn(dim, std::vector<long>(dim));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            mm[i][j] = m_coeff(index[i].plus, index[i].minus, index[j].plus,
                               index[j].minus);
            nn[i][j] = n_coeff(index[i].plus, index[i].minus, index[j].plus,
                               index[j].minus);
        }
    }
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            long mn = 0;
            long nm = 0;
            for (size_t k = 0; k < dim; ++k) {
                mn += mm[i][k] * nn[k][j];
                nm += nn[i][k] * mm[k][j];
            }
            const long want = i == j ? 1 : 0;
            if (mn != want || nm != want) return false;
        }
    }
    return true;
}

// ---- socle layers ----

SocleTable socle_layer_general(const PartitionPair& ab, const PartitionPair& gd,
                               long d) {
    check_partition(ab.plus, "socle base");
    check_partition(ab.minus, "socle base");
    check_partition(gd.plus, "socle base");
    check_partition(gd.minus, "socle base");
    const Partition &alpha = ab.plus, &beta = ab.minus;
    const Partition &gamma = gd.plus, &delta = gd.minus;
    const long bigm = partition_size(alpha) + partition_size(gamma);
    const long bign = partition_size(beta) + partition_size(delta);
    if (d < 0 || d > std::min(bigm, bign)) {
        throw DomainError("charalg: socle layer out of range");
    }

    SocleTable table;
    table.base1 = ab;
    table.base2 = gd;
    table.layer = d;

    // weight[(xi, pi)] = sum over sigma, tau, mu, nu, zeta, eta of the signed
    // product of the first six coefficients in the layer formula.
    std::map<std::pair<Partition, Partition>, long> weight;
    const long smax = std::min({partition_size(alpha), partition_size(beta), d});
    for (long s = 0; s <= smax; ++s) {
        for (const Partition& sigma : partitions_of(s)) {
            if (!contains(alpha, sigma)) continue;
            const Partition sigmac = conjugate(sigma);
            if (!contains(beta, sigmac)) continue;
            const long tmax = std::min({partition_size(gamma), partition_size(delta), d - s});
            for (long t = 0; t <= tmax; ++t) {
                for (const Partition& tau : partitions_of(t)) {
                    if (!contains(gamma, tau)) continue;
                    const Partition tauc = conjugate(tau);
                    if (!contains(delta, tauc)) continue;

                    std::map<Partition, long> vec1;
                    for (const Partition& mu : partitions_of(partition_size(alpha) - s)) {
                        const long a1 = lr_coefficient(alpha, sigma, mu);
                        if (a1 == 0) continue;
                        for (const Partition& zeta : partitions_of(partition_size(gamma) - t)) {
                            const long a2 = lr_coefficient(gamma, tau, zeta);
                            if (a2 == 0) continue;
                            for (const Partition& xi : partitions_of(bigm - s - t)) {
                                const long a3 = lr_coefficient(xi, mu, zeta);
                                if (a3) vec1[xi] += a1 * a2 * a3;
                            }
                        }
                    }
                    std::map<Partition, long> vec2;
                    for (const Partition& nu : partitions_of(partition_size(beta) - s)) {
                        const long b1 = lr_coefficient(beta, sigmac, nu);
                        if (b1 == 0) continue;
                        for (const Partition& eta : partitions_of(partition_size(delta) - t)) {
                            const long b2 = lr_coefficient(delta, tauc, eta);
                            if (b2 == 0) continue;
                            for (const Partition& pi : partitions_of(bign - s - t)) {
                                const long b3 = lr_coefficient(pi, nu, eta);
                                if (b3) vec2[pi] += b1 * b2 * b3;
                            }
                        }
                    }
                    const long sign = (s + t) % 2 ? -1 : 1;
                    for (const auto& [xi, v1] : vec1) {
                        for (const auto& [pi, v2] : vec2) {
                            weight[{xi, pi}] += sign * v1 * v2;
                        }
                    }
                }
            }
        }
    }

    for (const auto& [xipi, w] : weight) {
        if (w == 0) continue;
        const auto& [xi, pi] = xipi;
        const long rsize = partition_size(xi) - (bigm - d);
        for (const Partition& rho : partitions_of(rsize)) {
            for (const Partition& phi : partitions_of(bigm - d)) {
                const long c1 = lr_coefficient(xi, rho, phi);
                if (c1 == 0) continue;
                for (const Partition& psi : partitions_of(bign - d)) {
                    const long c2 = lr_coefficient(pi, rho, psi);
                    if (c2) table.entries[{phi, psi}] += w * c1 * c2;
                }
            }
        }
    }
    std::erase_if(table.entries, [](const auto& e) { return e.second == 0; });
    return table;
}

// ---- truncated Cauchy identities ----

namespace {

void check_shape(long nx, long ny, long cutoff) {
    if (nx < 0 || ny < 0 || cutoff < 0) {
        throw DomainError("charalg: truncated polynomial shape is invalid");
    }
}

void check_same_shape(const TruncPoly& a, const TruncPoly& b) {
    if (a.nx != b.nx || a.ny != b.ny || a.cutoff != b.cutoff) {
        throw DomainError("charalg: truncated polynomial shapes differ");
    }
}

bool over_cut(const TruncPoly& shape, const std::vector<long>& expo) {
    long xdeg = 0;
    long ydeg = 0;
    for (long i = 0; i < shape.nx; ++i) xdeg += expo[i];
    for (long i = 0; i < shape.ny; ++i) ydeg += expo[shape.nx + i];
    return xdeg > shape.cutoff || ydeg > shape.cutoff;
}

}  // namespace

std::string TruncPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [expo, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        bool unit = true;
        std::ostringstream mono;
        for (long i = 0; i < nx + ny; ++i) {
            if (expo[i] == 0) continue;
            if (!unit) mono << '*';
            unit = false;
            mono << (i < nx ? 'x' : 'y') << (i < nx ? i + 1 : i - nx + 1);
            if (expo[i] > 1) mono << '^' << expo[i];
        }
        if (unit) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << '*';
            os << mono.str();
        }
    }
    return os.str();
}

TruncPoly tp_const(long nx, long ny, long cutoff, const Rat& c) {
    check_shape(nx, ny, cutoff);
    TruncPoly out{nx, ny, cutoff, {}};
    if (c != 0) out.coeffs.emplace(std::vector<long>(nx + ny, 0), c);
    return out;
}

TruncPoly tp_var(long nx, long ny, long cutoff, bool on_y, long i) {
    check_shape(nx, ny, cutoff);
    const long n = on_y ? ny : nx;
    if (i < 1 || i > n) throw DomainError("charalg: variable index out of range");
    TruncPoly out{nx, ny, cutoff, {}};
    if (cutoff >= 1) {
        std::vector<long> expo(nx + ny, 0);
        expo[(on_y ? nx : 0) + i - 1] = 1;
        out.coeffs.emplace(std::move(expo), Rat(1));
    }
    return out;
}

TruncPoly tp_add(const TruncPoly& a, const TruncPoly& b) {
    check_same_shape(a, b);
    TruncPoly out = a;
    for (const auto& [expo, c] : b.coeffs) {
        auto it = out.coeffs.find(expo);
        if (it == out.coeffs.end()) {
            out.coeffs.emplace(expo, c);
        } else {
            it->second += c;
            if (it->second == 0) out.coeffs.erase(it);
        }
    }
    return out;
}

TruncPoly tp_mul(const TruncPoly& a, const TruncPoly& b) {
    check_same_shape(a, b);
    TruncPoly out{a.nx, a.ny, a.cutoff, {}};
    std::vector<long> expo(a.nx + a.ny);
    for (const auto& [ea, ca] : a.coeffs) {
        for (const auto& [eb, cb] : b.coeffs) {
            for (size_t i = 0; i < expo.size(); ++i) expo[i] = ea[i] + eb[i];
            if (over_cut(out, expo)) continue;
            auto it = out.coeffs.find(expo);
            if (it == out.coeffs.end()) {
                Rat c = ca * cb;
                if (c != 0) out.coeffs.emplace(expo, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.coeffs.erase(it);
            }
        }
    }
    return out;
}

TruncPoly tp_scale(const Rat& c, const TruncPoly& a) {
    TruncPoly out{a.nx, a.ny, a.cutoff, {}};
    if (c == 0) return out;
    for (const auto& [expo, v] : a.coeffs) out.coeffs.emplace(expo, c * v);
    return out;
}

namespace {

using TElem = CharElementT<TruncPoly>;

// y_j^a or x_j^a as a truncated monomial.
TruncPoly tp_power(long k, long cutoff, bool on_y, long j, long a) {
    TruncPoly out = tp_const(k, k, cutoff, Rat(1));
    if (a > cutoff) return tp_const(k, k, cutoff, Rat(0));
    std::vector<long> expo(2 * k, 0);
    expo[(on_y ? k : 0) + j - 1] = a;
    out.coeffs.clear();
    out.coeffs.emplace(std::move(expo), Rat(1));
    return out;
}

}  // namespace

namespace {

// One exponent vector of a TruncPoly as a monomial string.
std::string mono_str(long nx, const std::vector<long>& expo) {
    std::ostringstream mono;
    bool unit = true;
    for (size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0) continue;
        if (!unit) mono << '*';
        unit = false;
        const long idx = static_cast<long>(i);
        mono << (idx < nx ? 'x' : 'y') << (idx < nx ? idx + 1 : idx - nx + 1);
        if (expo[i] > 1) mono << '^' << expo[i];
    }
    return unit ? "1" : mono.str();
}

}  // namespace

CauchyReport verify_cauchy_report(CauchyKind kind, long num_vars, long cutoff) {
    if (num_vars < 1) throw DomainError("charalg: num_vars must be at least 1");
    if (cutoff < 0) throw DomainError("charalg: cutoff must be nonnegative");
    const long k = num_vars;
    const Family fam = kind == CauchyKind::EE ? Family::E : Family::H;

    TElem unit;
    unit.terms.emplace(CharWord{}, tp_const(k, k, cutoff, Rat(1)));

    // E+(y) = E+(y_1) ... E+(y_k); in the EH case each e^+_a is expanded in
    // the h generators as the column determinant s^+_{(1^a)}.
    TElem eplus = unit;
    for (long j = 1; j <= k; ++j) {
        TElem factor;
        for (long a = 0; a <= cutoff; ++a) {
            const TruncPoly ya = tp_power(k, cutoff, true, j, a);
            if (kind == CauchyKind::EE) {
                CharWord w = a == 0 ? CharWord{} : CharWord{{+1, fam, a}};
                accumulate(factor.terms, w, ya);
            } else {
                for (const auto& [w, c] : schur(+1, Family::H, Partition(a, 1)).terms) {
                    accumulate(factor.terms, w, tp_scale(c, ya));
                }
            }
        }
        eplus = mul_impl(eplus, factor, Strategy::Leftmost);
    }

    // E-(x) or H-(x) over x_1 .. x_k; single generator words either way.
    TElem minus = unit;
    for (long j = 1; j <= k; ++j) {
        TElem factor;
        for (long a = 0; a <= cutoff; ++a) {
            CharWord w = a == 0 ? CharWord{} : CharWord{{-1, fam, a}};
            accumulate(factor.terms, w, tp_power(k, cutoff, false, j, a));
        }
        minus = mul_impl(minus, factor, Strategy::Leftmost);
    }

    const TElem lhs = mul_impl(eplus, minus, Strategy::Leftmost);

    TruncPoly kernel = tp_const(k, k, cutoff, Rat(1));
    for (long i = 1; i <= k; ++i) {
        for (long j = 1; j <= k; ++j) {
            TruncPoly factor = tp_const(k, k, cutoff, Rat(1));
            if (kind == CauchyKind::EE) {
                for (long t = 1; t <= cutoff; ++t) {
                    TruncPoly xy = tp_mul(tp_power(k, cutoff, false, i, t),
                                          tp_power(k, cutoff, true, j, t));
                    factor = tp_add(factor, xy);
                }
            } else {
                factor = tp_add(factor, tp_mul(tp_var(k, k, cutoff, false, i),
                                               tp_var(k, k, cutoff, true, j)));
            }
            kernel = tp_mul(kernel, factor);
        }
    }

    TElem rhs;
    for (const auto& [w, c] : mul_impl(minus, eplus, Strategy::Leftmost).terms) {
        accumulate(rhs.terms, w, tp_mul(c, kernel));
    }

    CauchyReport report;
    if (lhs == rhs) return report;
    report.ok = false;
    std::set<CharWord> words;
    for (const auto& [w, c] : lhs.terms) words.insert(w);
    for (const auto& [w, c] : rhs.terms) words.insert(w);
    const TruncPoly zero = tp_const(k, k, cutoff, Rat(0));
    for (const CharWord& w : words) {
        auto lit = lhs.terms.find(w);
        auto rit = rhs.terms.find(w);
        const TruncPoly& lc = lit == lhs.terms.end() ? zero : lit->second;
        const TruncPoly& rc = rit == rhs.terms.end() ? zero : rit->second;
        std::set<std::vector<long>> expos;
        for (const auto& [e, c] : lc.coeffs) expos.insert(e);
        for (const auto& [e, c] : rc.coeffs) expos.insert(e);
        for (const std::vector<long>& e : expos) {
            auto la = lc.coeffs.find(e);
            auto ra = rc.coeffs.find(e);
            const Rat a = la == lc.coeffs.end() ? Rat(0) : la->second;
            const Rat b = ra == rc.coeffs.end() ? Rat(0) : ra->second;
            if (a != b) {
                report.detail = "word " + word_str(w) + ", monomial " + mono_str(k, e) +
                                ": left " + a.str() + ", right " + b.str();
                return report;
            }
        }
    }
    report.detail = "sides differ with no coefficient mismatch";
    return report;
}

bool verify_cauchy(CauchyKind kind, long num_vars, long cutoff) {
    return verify_cauchy_report(kind, num_vars, cutoff).ok;
}

}  // namespace crystalkit

// charalg.hpp
// The noncommutative character ring A generated by h^+_r and h^-_s subject to
// h^+_r h^-_s = h^-_s h^+_r + h^-_{s-1} h^+_{r-1} + ... + h^-_{s-m} h^+_{r-m}
// with m = min(r, s), together with the parallel e-generator presentation
// satisfying the same relation: normal ordering, Jacobi-Trudi Schur elements,
// the transition coefficients m and n between the two monomial bases, the
// general socle layer multiplicity table, and truncated verification of the
// non-symmetric Cauchy identities.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "partitions.hpp"
#include "ratfun.hpp"

namespace crystalkit {

// ---- words ----

enum class Family { H, E };

// One generator h^sign_deg or e^sign_deg; sign is +1 or -1, deg >= 1.
struct CharFactor {
    int sign = 1;
    Family family = Family::H;
    long deg = 1;
    auto operator<=>(const CharFactor&) const = default;
};

// Product of generators, leftmost factor first. The empty word is the unit.
using CharWord = std::vector<CharFactor>;

// All minus factors precede all plus factors and each block is weakly
// decreasing in degree.
bool word_is_normal(const CharWord& w);
// The normal word with minus block nu and plus block mu, both partitions.
CharWord normal_word(Family family, const Partition& nu, const Partition& mu);
// Inverse of normal_word: (minus block, plus block) of a normal word.
std::pair<Partition, Partition> word_partitions(const CharWord& w);
std::string word_str(const CharWord& w);

// ---- elements ----

// Sparse combination of normal words. No zero coefficients are stored; every
// key is normal and all keys share one family.
template <class Coeff>
struct CharElementT {
    std::map<CharWord, Coeff> terms;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const CharElementT&) const = default;
};

using CharElement = CharElementT<Rat>;

// Multiplicities of the normal words produced by rewriting w. Validates that
// w has positive degrees and a single family, then applies the defining
// relation at one (+,-) adjacency per step until the word is normal. Both
// strategies agree; results are memoized per strategy.
std::map<CharWord, long> normal_order_word(const CharWord& w,
                                           Strategy strategy = Strategy::Leftmost);
CharElement normal_order(const CharWord& w, Strategy strategy = Strategy::Leftmost);

CharElement char_zero();
CharElement char_unit();
CharElement char_monomial(const CharWord& w);
CharElement add(const CharElement& x, const CharElement& y);
CharElement scale(const Rat& c, const CharElement& x);
CharElement mul(const CharElement& x, const CharElement& y,
                Strategy strategy = Strategy::Leftmost);
std::string char_str(const CharElement& x);

// ---- Schur elements and transition coefficients ----

// s^sign_lam as det(h^sign_{lam_i - i + j}) over len(lam) for the h family,
// det(e^sign_{lam'_i - i + j}) over len(lam') for the e family.
CharElement schur(int sign, Family family, const Partition& lam);

// m^{mu,nu}_{zeta,eta} = sum_sigma c^mu_{sigma zeta} c^nu_{sigma eta}.
long m_coeff(const Partition& mu, const Partition& nu,
             const Partition& zeta, const Partition& eta);
// n^{sigma,tau}_{mu,nu} = sum_lam (-1)^|lam| c^sigma_{lam mu} c^tau_{lam' nu}.
long n_coeff(const Partition& sigma, const Partition& tau,
             const Partition& mu, const Partition& nu);

// The matrices (m^{mu,nu}_{zeta,eta}) and (n^{sigma,tau}_{mu,nu}) over pairs
// with |mu|, |nu| <= degree are mutually inverse.
bool verify_transition_inverse(long degree);

// ---- socle layers ----

struct SocleTable {
    PartitionPair base1;
    PartitionPair base2;
    long layer = 0;
    std::map<PartitionPair, long> entries;
    bool operator==(const SocleTable&) const = default;
};

// Multiplicity table of soc^{d+1}/soc^d for V_{alpha,beta} (x) V_{gamma,delta};
// entries live on pairs (phi, psi) with |phi| = M - d and |psi| = N - d where
// M = |alpha| + |gamma| and N = |beta| + |delta|. Requires 0 <= d <= min(M, N).
SocleTable socle_layer_general(const PartitionPair& ab, const PartitionPair& gd,
                               long d);

// ---- truncated Cauchy identities ----

// Polynomial in x_1..x_nx, y_1..y_ny truncated past total x degree or total
// y degree cutoff. The shape (nx, ny, cutoff) is part of the value; mixing
// shapes in arithmetic is a domain error.
struct TruncPoly {
    long nx = 0;
    long ny = 0;
    long cutoff = 0;
    std::map<std::vector<long>, Rat> coeffs;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const TruncPoly&) const = default;
    std::string str() const;
};

TruncPoly tp_const(long nx, long ny, long cutoff, const Rat& c);
// x_i for 1 <= i <= nx when on_y is false, y_i for 1 <= i <= ny otherwise.
TruncPoly tp_var(long nx, long ny, long cutoff, bool on_y, long i);
TruncPoly tp_add(const TruncPoly& a, const TruncPoly& b);
TruncPoly tp_mul(const TruncPoly& a, const TruncPoly& b);
TruncPoly tp_scale(const Rat& c, const TruncPoly& a);

enum class CauchyKind { EE, EH };

struct CauchyReport {
    bool ok = true;
    std::string detail;  // first differing coefficient when not ok
    bool operator==(const CauchyReport&) const = default;
};

// Expands both sides of E+(y)E-(x) = E-(x)E+(y) prod (1-x_i y_j)^{-1} (kind
// EE) or E+(y)H-(x) = H-(x)E+(y) prod (1+x_i y_j) (kind EH) over k variables
// per alphabet, truncated past degree cutoff in x or in y, normal orders the
// left side, and compares coefficientwise. The EH side works inside the h
// presentation with e^+_a expanded as the Jacobi-Trudi column determinant.
// On a mismatch the report names the first differing coefficient, scanning
// words then monomials in their canonical orders.
CauchyReport verify_cauchy_report(CauchyKind kind, long num_vars, long cutoff);
bool verify_cauchy(CauchyKind kind, long num_vars, long cutoff);

}  // namespace crystalkit

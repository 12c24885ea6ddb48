// qwedge.hpp
// The q-deformed exterior algebra W_{m,n} on the letters (a,b) in
// [1..m] x [1..n]: straightening onto the standard monomial basis, the two
// commuting quantum group actions (U_q(gl_m) through column words with the
// lower comultiplication, U_p(gl_n) through row words with the opposite upper
// comultiplication at p = -q^-1), the bilinear form, the bar involution,
// canonical bases, and representation-level crystal operators.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "ratfun.hpp"

namespace crystalkit {

// A letter (a, b); a indexes the gl_m direction, b the gl_n direction.
using Letter = std::pair<long, long>;
using WedgeWord = std::vector<Letter>;

// (a,b) < (c,d) iff b < d, or b = d and a > c. Standard words are strictly
// increasing; reading a 0/1 matrix column by column left to right, bottom to
// top inside each column, lists its cells in exactly this order.
bool letter_lt(const Letter& x, const Letter& y);
bool word_is_standard(const WedgeWord& w);

// Standard monomial keys are mn bits in row-major order, bit (a-1)*n+(b-1)
// for the cell (a, b), matching the MatrixCrystal payload layout.
Elem word_to_key(long m, long n, const WedgeWord& w);
WedgeWord key_to_word(long m, long n, const Elem& key);
std::vector<long> key_row_sums(long m, long n, const Elem& key);
std::vector<long> key_col_sums(long m, long n, const Elem& key);

// Diagonal sums c(M)(i) = sum_k M_{i+k,k}, listed for i from 1-n up to m-1.
std::vector<long> c_vector(long m, long n, const Elem& key);
// Lexicographic comparison of c vectors, scanning i upward from 1-n.
bool c_lex_less(long m, long n, const Elem& a, const Elem& b);

// An element of W_{m,n}: a finite combination of standard monomials with
// rational function coefficients. Immutable value semantics; no zero
// coefficients are stored.
struct WedgeElement {
    long m = 1;
    long n = 1;
    std::map<Elem, RatFun> terms;

    bool is_zero() const { return terms.empty(); }
    std::string str() const;
    bool operator==(const WedgeElement&) const = default;
};

WedgeElement wedge_zero(long m, long n);
// The empty wedge, the unit of the algebra.
WedgeElement wedge_unit(long m, long n);
WedgeElement wedge_monomial(long m, long n, const Elem& key);

WedgeElement add(const WedgeElement& x, const WedgeElement& y);
WedgeElement scale(const RatFun& c, const WedgeElement& x);

// Expand an arbitrary word in the standard monomial basis by the oriented
// two-letter relations.
WedgeElement straighten(long m, long n, const WedgeWord& w,
                        Strategy strategy = Strategy::Leftmost);

// Bilinear extension of word concatenation followed by straightening.
WedgeElement wedge(const WedgeElement& x, const WedgeElement& y);

// ---- the two commuting module structures ----

enum class Side { Q, P };
enum class Gen { E, F, Kdiag, KdiagInv };

// Generator action on an element. Side Q: E(i), F(i) for i in [1..m-1] and
// Kdiag(i) = q^{E_ii} for i in [1..m]. Side P: the dotted generators with
// indices bounded by n, every p power stored as an element of Q(q) via
// p = -q^-1.
WedgeElement act(Side side, Gen g, long index, const WedgeElement& x);

// The same action computed letter by letter on a formal word through the
// iterated comultiplication, without straightening. Returns the formal
// word combination; words keep their length and order.
std::map<WedgeWord, RatFun> act_tensor_word(Side side, Gen g, long index,
                                            const WedgeWord& w);

// <w_M, w_N> = delta_{M,N}, extended bilinearly.
RatFun pairing(const WedgeElement& x, const WedgeElement& y);

// Bar involution: bar(q) = q^-1 on coefficients; a standard monomial with
// word ((c_1,d_1),...,(c_k,d_k)) maps to q^{-l(w_c)} p^{-l(w_d)} times the
// reversed word, straightened, where l counts inversions of the longest
// permutation fixing the row tuple c (resp. column tuple d).
WedgeElement bar(const WedgeElement& x);

// ---- canonical basis ----

// All standard monomial keys with the given row and column sums.
std::vector<Elem> biweight_space(long m, long n, const std::vector<long>& row_sums,
                                 const std::vector<long>& col_sums);

// For every key M in the bi-weight space, the unique bar-invariant
// G(M) = w_M + sum over c-lower keys N of q ZZ[q] multiples of w_N.
// Pairs are listed in increasing c order.
std::vector<std::pair<Elem, WedgeElement>> canonical_basis(
    long m, long n, const std::vector<long>& row_sums,
    const std::vector<long>& col_sums);

// ---- representation-level crystal operators ----

enum class Variant { Lower, Upper };

// Kashiwara operators on a bi-weight vector: decompose the i-string by the
// top-down divided power recursion, then reassemble with the lower or upper
// coefficients. Side P runs the same machinery through the dotted action
// with every scalar evaluated at -q, the image of q under the twist that
// matches the two parameters.
WedgeElement rep_tilde_f(Side side, Variant v, long index, const WedgeElement& x);
WedgeElement rep_tilde_e(Side side, Variant v, long index, const WedgeElement& x);

}  // namespace crystalkit

// ratfun.hpp
// Exact arithmetic in Q[q,q^-1] and its fraction field Q(q): sparse Laurent
// polynomials with rational coefficients, canonical rational functions,
// quantum integers, factorials and Gaussian binomials, the bar substitution
// q -> q^-1, and the q-adic valuation.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace crystalkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on invalid inputs (preconditions, parse errors, range errors).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an enumeration exceeds the configured element budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sparse Laurent polynomial over Q. No zero coefficients are stored, so the
// representation is canonical per value.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) { if (c != 0) coeffs_[0] = c; }
    explicit LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly q(int exp = 1) { return monomial(1, exp); }
    static LaurentPoly monomial(const Rat& c, int exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // min_exp/max_exp require a nonzero value.
    int min_exp() const;
    int max_exp() const;
    Rat coeff(int exp) const;
    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(int k) const;  // multiply by q^k
    LaurentPoly bar() const;           // substitute q -> q^-1
    LaurentPoly subst_neg_q() const;   // substitute q -> -q
    LaurentPoly pow(unsigned long k) const;
    // Evaluate at a nonzero rational point (or any point if min_exp >= 0).
    Rat eval(const Rat& x) const;

    // Exact division: returns a/b when the remainder vanishes, else nullopt.
    static std::optional<LaurentPoly> div_exact(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly&) const = default;
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // Text form: sparse, ascending exponents, e.g. "-1*q^-1 + 2 + 1*q^3".
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::map<int, Rat> coeffs_;
};

// [a] = (q^a - q^-a)/(q - q^-1); [0] = 0; [-a] = -[a].
LaurentPoly qint(long a);
// [a]! for a >= 0.
LaurentPoly qfact(long a);
// Gaussian binomial for any integer n and k >= 0, via the product formula
// [n][n-1]...[n-k+1] / [k]!. Symmetric under q -> q^-1.
LaurentPoly qbinom(long n, long k);

// Rational function in q with a unique canonical form: numerator and
// denominator coprime in Q[q] after clearing q-powers, the denominator with
// lowest exponent 0 and monic leading coefficient.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const LaurentPoly& n) : num_(n), den_(Rat(1)) { normalize(); }
    RatFun(const LaurentPoly& n, const LaurentPoly& d);
    explicit RatFun(long c) : num_(LaurentPoly(c)), den_(Rat(1)) {}
    explicit RatFun(const Rat& c) : num_(LaurentPoly(c)), den_(Rat(1)) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    // Requires is_laurent().
    const LaurentPoly& as_laurent() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    RatFun inverse() const;

    RatFun bar() const;          // q -> q^-1
    RatFun subst_neg_q() const;  // q -> -q
    // Order of vanishing at q = 0; nullopt encodes +infinity (the zero value).
    std::optional<long> valuation() const;
    Rat eval(const Rat& x) const;

    bool operator==(const RatFun&) const = default;
    bool operator<(const RatFun& o) const;

    std::string str() const;
    static RatFun parse(const std::string& s);

private:
    LaurentPoly num_, den_;
    void normalize();
};

inline RatFun rf_q(int exp = 1) { return RatFun(LaurentPoly::q(exp)); }
// p = -q^-1 raised to the k-th power, as an element of Q(q).
RatFun p_power(long k);

}  // namespace crystalkit

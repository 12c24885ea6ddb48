// ratfun.cpp

#include "ratfun.hpp"

#include <sstream>
#include <vector>

namespace crystalkit {

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::monomial(const Rat& c, int exp) {
    LaurentPoly r;
    if (c != 0) r.coeffs_[exp] = c;
    return r;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw DomainError("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw DomainError("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rat LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            Rat prod = ca * cb;
            auto it = r.coeffs_.find(ea + eb);
            if (it == r.coeffs_.end()) {
                r.coeffs_[ea + eb] = prod;
            } else {
                it->second += prod;
            }
        }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
        it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e + k] = v;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[-e] = v;
    return r;
}

LaurentPoly LaurentPoly::subst_neg_q() const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = (e % 2 == 0) ? v : -v;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly r(Rat(1));
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (const auto& [e, c] : coeffs_) {
        if (e >= 0) {
            Rat t = 1;
            for (int i = 0; i < e; ++i) t *= x;
            acc += c * t;
        } else {
            if (x == 0) throw DomainError("evaluating negative power at 0");
            Rat t = 1;
            for (int i = 0; i < -e; ++i) t *= x;
            acc += c / t;
        }
    }
    return acc;
}

namespace {

// Dense representation of a polynomial with min exponent 0: v[i] is the
// coefficient of q^i, trailing zeros trimmed.
std::vector<Rat> to_dense(const LaurentPoly& p) {
    std::vector<Rat> v;
    if (p.is_zero()) return v;
    v.assign(static_cast<size_t>(p.max_exp()) + 1, Rat(0));
    for (const auto& [e, c] : p.coeffs()) v[static_cast<size_t>(e)] = c;
    return v;
}

LaurentPoly from_dense(const std::vector<Rat>& v) {
    LaurentPoly r;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r += LaurentPoly::monomial(v[i], static_cast<int>(i));
    return r;
}

void trim_dense(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Long division of genuine polynomials (min exponent 0), returning (quot, rem).
std::pair<std::vector<Rat>, std::vector<Rat>> divmod_dense(std::vector<Rat> a,
                                                           const std::vector<Rat>& b) {
    trim_dense(a);
    if (b.empty()) throw DomainError("polynomial division by zero");
    std::vector<Rat> quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rat f = a.back() / lead;
        quot[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim_dense(a);
    }
    return {quot, a};
}

// Monic gcd in Q[q] of two polynomials with min exponent 0.
std::vector<Rat> gcd_dense(std::vector<Rat> a, std::vector<Rat> b) {
    trim_dense(a);
    trim_dense(b);
    while (!b.empty()) {
        auto [quot, rem] = divmod_dense(a, b);
        (void)quot;
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.empty() && a.back() != 1) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    int shift = a.min_exp() - b.min_exp();
    auto [quot, rem] = divmod_dense(to_dense(a.shifted(-a.min_exp())),
                                    to_dense(b.shifted(-b.min_exp())));
    if (!rem.empty()) return std::nullopt;
    return from_dense(quot).shifted(shift);
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
        } else {
            os << c << "*q^" << e;
        }
    }
    return os.str();
}

namespace {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational in polynomial text");
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw DomainError("bad rational '" + s + "' in polynomial text");
    }
}

std::string strip_ws(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) throw DomainError("empty polynomial text");
    if (s == "0") return LaurentPoly();
    LaurentPoly result;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find('+', pos);
        std::string term = strip_ws(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (term.empty()) throw DomainError("empty term in polynomial text");
        size_t qpos = term.find('q');
        if (qpos == std::string::npos) {
            result += LaurentPoly(parse_rational(term));
        } else {
            std::string pre = strip_ws(term.substr(0, qpos));
            std::string post = strip_ws(term.substr(qpos + 1));
            Rat c(1);
            if (!pre.empty()) {
                if (pre.back() == '*') pre = strip_ws(pre.substr(0, pre.size() - 1));
                if (pre == "-") {
                    c = -1;
                } else if (!pre.empty()) {
                    c = parse_rational(pre);
                }
            }
            int e = 1;
            if (!post.empty()) {
                if (post[0] != '^') throw DomainError("expected '^' after q in '" + term + "'");
                try {
                    e = std::stoi(post.substr(1));
                } catch (const std::exception&) {
                    throw DomainError("bad exponent in '" + term + "'");
                }
            }
            result += monomial(c, e);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return result;
}

// ---- quantum integers ----

LaurentPoly qint(long a) {
    if (a == 0) return LaurentPoly();
    if (a < 0) return -qint(-a);
    LaurentPoly r;
    for (long j = 0; j < a; ++j) r += LaurentPoly::monomial(1, static_cast<int>(a - 1 - 2 * j));
    return r;
}

LaurentPoly qfact(long a) {
    if (a < 0) throw DomainError("qfact of negative integer");
    LaurentPoly r(Rat(1));
    for (long j = 2; j <= a; ++j) r *= qint(j);
    return r;
}

LaurentPoly qbinom(long n, long k) {
    if (k < 0) throw DomainError("qbinom with negative k");
    LaurentPoly numer(Rat(1));
    for (long j = 0; j < k; ++j) {
        numer *= qint(n - j);
        if (numer.is_zero()) return numer;
    }
    auto quot = LaurentPoly::div_exact(numer, qfact(k));
    if (!quot) throw DomainError("qbinom product not divisible by [k]!");
    return *quot;
}

// ---- RatFun ----

RatFun::RatFun(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) { normalize(); }

void RatFun::normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    int vn = num_.min_exp();
    int vd = den_.min_exp();
    LaurentPoly n0 = num_.shifted(-vn);
    LaurentPoly d0 = den_.shifted(-vd);
    std::vector<Rat> g = gcd_dense(to_dense(n0), to_dense(d0));
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        LaurentPoly gp = from_dense(g);
        n0 = *LaurentPoly::div_exact(n0, gp);
        d0 = *LaurentPoly::div_exact(d0, gp);
    }
    Rat lead = d0.coeff(d0.max_exp());
    if (lead != 1) {
        Rat inv = 1 / lead;
        n0 = n0.scaled(inv);
        d0 = d0.scaled(inv);
    }
    num_ = n0.shifted(vn - vd);
    den_ = d0;
}

const LaurentPoly& RatFun::as_laurent() const {
    if (!den_.is_one()) throw DomainError("rational function is not a Laurent polynomial");
    return num_;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DomainError("division of rational functions by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::bar() const { return RatFun(num_.bar(), den_.bar()); }

RatFun RatFun::subst_neg_q() const { return RatFun(num_.subst_neg_q(), den_.subst_neg_q()); }

std::optional<long> RatFun::valuation() const {
    if (is_zero()) return std::nullopt;
    return static_cast<long>(num_.min_exp()) - static_cast<long>(den_.min_exp());
}

Rat RatFun::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw DomainError("evaluation at a pole");
    return num_.eval(x) / d;
}

bool RatFun::operator<(const RatFun& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun RatFun::parse(const std::string& text) {
    std::string s = strip_ws(text);
    size_t sep = s.find(")/(");
    if (!s.empty() && s.front() == '(' && sep != std::string::npos && s.back() == ')') {
        std::string ns = s.substr(1, sep - 1);
        std::string ds = s.substr(sep + 3, s.size() - sep - 4);
        return RatFun(LaurentPoly::parse(ns), LaurentPoly::parse(ds));
    }
    return RatFun(LaurentPoly::parse(s));
}

RatFun p_power(long k) {
    Rat sign = (k % 2 != 0) ? Rat(-1) : Rat(1);
    return RatFun(LaurentPoly::monomial(sign, static_cast<int>(-k)));
}

}  // namespace crystalkit

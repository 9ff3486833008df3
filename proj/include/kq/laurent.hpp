#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

namespace kq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Element of Lambda = Z[t, t^-1], stored sparsely as exponent -> coefficient.
/// Zero coefficients are never stored; the zero polynomial is the empty map.
/// Coefficients are arbitrary precision. All operations are pure; values are
/// immutable once built apart from the compound assignment operators.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long long c) { set_term(0, BigInt(c)); }
    explicit LaurentPoly(const BigInt& c) { set_term(0, c); }

    /// c * t^exp
    static LaurentPoly term(const BigInt& c, long exp);
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly t(long exp = 1) { return term(1, exp); }

    /// Parses the canonical text form, e.g. "t^2 - t + 1", "0", "-3t^-2 + 5".
    static LaurentPoly parse(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True for the units of Lambda, i.e. +-t^k.
    bool is_unit() const;

    long min_exp() const; // requires nonzero
    long max_exp() const; // requires nonzero
    BigInt coeff(long exp) const;
    const std::map<long, BigInt>& terms() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Canonical text form: terms in decreasing exponent, "t^k" exponents
    /// (k possibly negative), "t" for k = 1, bare integer for k = 0.
    std::string str() const;

private:
    void set_term(long exp, const BigInt& c);
    std::map<long, BigInt> coeffs_;
};

/// Unique associate of p under multiplication by units +-t^k: minimal
/// exponent shifted to 0 and the top coefficient made positive.
/// normalized(0) = 0.
LaurentPoly normalized(const LaurentPoly& p);

/// GCD in the UFD Z[t,t^-1], returned in normalized form. Computed by
/// shifting both arguments into Z[t] and running a content/primitive-part
/// GCD with a primitive pseudo-remainder sequence. gcd(a, 0) = normalized(a).
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Substitution t -> t^w. For w = 0 the result is the constant a(1).
LaurentPoly subst_power(const LaurentPoly& a, long w);

/// Exact evaluation at an integer point. Throws ZeroEvaluationPoint when
/// v = 0 and the polynomial has negative exponents.
BigRat eval_at(const LaurentPoly& a, const BigInt& v);

/// Exact quotient a / b in Lambda, or nullopt when b does not divide a.
/// divide_exact(0, 0) = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// True when b divides a in Lambda.
bool divides(const LaurentPoly& b, const LaurentPoly& a);

} // namespace kq

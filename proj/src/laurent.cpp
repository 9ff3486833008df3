#include "kq/laurent.hpp"

#include "kq/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace kq {

void LaurentPoly::set_term(long exp, const BigInt& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::term(const BigInt& c, long exp) {
    LaurentPoly p;
    p.set_term(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.count(0) && coeffs_.at(0) == 1;
}

bool LaurentPoly::is_unit() const {
    if (coeffs_.size() != 1)
        return false;
    const BigInt& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

long LaurentPoly::min_exp() const { return coeffs_.begin()->first; }
long LaurentPoly::max_exp() const { return coeffs_.rbegin()->first; }

BigInt LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
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
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                BigInt prod = ca * cb;
                if (prod != 0)
                    r.coeffs_[e] = std::move(prod);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        long e = it->first;
        const BigInt& c = it->second;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.str();
        } else {
            if (mag != 1)
                out << mag.str();
            out << "t";
            if (e != 1)
                out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size())
        throw ParseError("empty polynomial text");
    bool any = false;
    int sign = 1;
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i == text.size())
            break;
        char ch = text[i];
        if (!expect_term) {
            if (ch == '+') {
                sign = 1;
            } else if (ch == '-') {
                sign = -1;
            } else {
                throw ParseError("expected '+' or '-' in polynomial: " + text);
            }
            ++i;
            expect_term = true;
            continue;
        }
        if (ch == '-') { // leading minus
            sign = -sign;
            ++i;
            continue;
        }
        if (ch == '+') {
            ++i;
            continue;
        }
        // term: [integer][t[^exp]]
        BigInt mag = 1;
        bool have_digits = false;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i];
            ++i;
            have_digits = true;
        }
        if (have_digits)
            mag = BigInt(digits);
        long exp = 0;
        bool have_t = false;
        if (i < text.size() && text[i] == 't') {
            have_t = true;
            exp = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool neg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    neg = text[i] == '-';
                    ++i;
                }
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    ed += text[i];
                    ++i;
                }
                if (ed.empty())
                    throw ParseError("missing exponent after '^': " + text);
                exp = std::stol(ed);
                if (neg)
                    exp = -exp;
            }
        }
        if (!have_digits && !have_t)
            throw ParseError("unexpected character in polynomial: " + text);
        result += LaurentPoly::term(sign < 0 ? BigInt(-mag) : mag, exp);
        any = true;
        sign = 1;
        expect_term = false;
    }
    if (!any)
        throw ParseError("no terms in polynomial: " + text);
    return result;
}

LaurentPoly normalized(const LaurentPoly& p) {
    if (p.is_zero())
        return p;
    long shift = -p.min_exp();
    bool flip = p.terms().rbegin()->second < 0;
    LaurentPoly r;
    for (const auto& [e, c] : p.terms())
        r += LaurentPoly::term(flip ? BigInt(-c) : c, e + shift);
    return r;
}

namespace {

// Dense Z[t] helpers used by the gcd and exact-division routines. A poly is
// a coefficient vector indexed by exponent, no trailing zeros, empty = 0.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ZPoly to_zpoly(const LaurentPoly& p, long& shift) {
    shift = p.min_exp();
    ZPoly v(static_cast<size_t>(p.max_exp() - shift) + 1);
    for (const auto& [e, c] : p.terms())
        v[static_cast<size_t>(e - shift)] = c;
    return v;
}

LaurentPoly from_zpoly(const ZPoly& v, long shift) {
    LaurentPoly p;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            p += LaurentPoly::term(v[i], static_cast<long>(i) + shift);
    return p;
}

BigInt content(const ZPoly& p) {
    BigInt g = 0;
    for (const auto& c : p)
        g = boost::multiprecision::gcd(g, c);
    return g; // nonnegative
}

ZPoly divide_by_int(const ZPoly& p, const BigInt& d) {
    ZPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = p[i] / d;
    return r;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.empty())
        return p;
    BigInt c = content(p);
    ZPoly r = divide_by_int(p, c);
    if (r.back() < 0)
        for (auto& x : r)
            x = -x;
    return r;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod  b.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const BigInt& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        BigInt la = a.back();
        for (auto& c : a)
            c *= lb;
        for (long j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] -= la * b[static_cast<size_t>(j)];
        trim(a);
    }
    return a;
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    trim(a);
    trim(b);
    if (a.empty())
        return primitive_part(b);
    if (b.empty())
        return primitive_part(a);
    BigInt c = boost::multiprecision::gcd(content(a), content(b));
    ZPoly p = primitive_part(a);
    ZPoly q = primitive_part(b);
    if (p.size() < q.size())
        std::swap(p, q);
    while (!q.empty()) {
        ZPoly r = pseudo_rem(p, q);
        p = std::move(q);
        q = primitive_part(r);
    }
    for (auto& x : p)
        x *= c;
    return p;
}

} // namespace

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero())
        return normalized(b);
    if (b.is_zero())
        return normalized(a);
    long sa, sb;
    ZPoly za = to_zpoly(a, sa);
    ZPoly zb = to_zpoly(b, sb);
    return normalized(from_zpoly(zpoly_gcd(za, zb), 0));
}

LaurentPoly subst_power(const LaurentPoly& a, long w) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms())
        r += LaurentPoly::term(c, e * w);
    return r;
}

BigRat eval_at(const LaurentPoly& a, const BigInt& v) {
    if (v == 0) {
        if (!a.is_zero() && a.min_exp() < 0)
            throw ZeroEvaluationPoint("cannot evaluate negative exponents at 0");
        return BigRat(a.coeff(0));
    }
    BigRat sum = 0;
    for (const auto& [e, c] : a.terms()) {
        if (e >= 0) {
            sum += BigRat(c * boost::multiprecision::pow(v, static_cast<unsigned>(e)));
        } else {
            sum += BigRat(c) / BigRat(boost::multiprecision::pow(v, static_cast<unsigned>(-e)));
        }
    }
    return sum;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero())
        return a.is_zero() ? std::optional<LaurentPoly>(LaurentPoly()) : std::nullopt;
    if (a.is_zero())
        return LaurentPoly();
    long sa, sb;
    ZPoly na = to_zpoly(a, sa);
    ZPoly nb = to_zpoly(b, sb);
    // Long division in Z[t]; b | a in Lambda iff the shifted copies divide
    // in Z[t] (both have nonzero constant term, so no stray t factors).
    ZPoly quot(na.size() >= nb.size() ? na.size() - nb.size() + 1 : 0);
    ZPoly rem = na;
    trim(rem);
    const BigInt& lb = nb.back();
    while (rem.size() >= nb.size()) {
        BigInt lr = rem.back();
        if (lr % lb != 0)
            return std::nullopt;
        BigInt q = lr / lb;
        size_t pos = rem.size() - nb.size();
        quot[pos] = q;
        for (size_t j = 0; j < nb.size(); ++j)
            rem[pos + j] -= q * nb[j];
        trim(rem);
    }
    if (!rem.empty())
        return std::nullopt;
    return from_zpoly(quot, sa - sb);
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    return divide_exact(a, b).has_value();
}

} // namespace kq

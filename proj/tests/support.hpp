#pragma once

// Test-only helpers: file loading, a small independent polynomial type used
// as an oracle for the Laurent/matrix layers, and brute-force coloring
// enumeration. The oracle code deliberately avoids the library's arithmetic
// paths (plain int64 coefficient maps, cofactor determinants, exhaustive
// search) so the two sides of every comparison are independent.

#include "kq/coloring.hpp"
#include "kq/diagram.hpp"
#include "kq/finiteq.hpp"
#include "kq/lmatrix.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef KQ_TEST_DATA
#define KQ_TEST_DATA "tests/data"
#endif

namespace kqtest {

inline std::string read_file(const std::string& name) {
    std::string path = std::string(KQ_TEST_DATA) + "/" + name;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open test data file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline kq::Diagram load_diagram(const std::string& name) {
    return kq::parse_diagram(read_file(name));
}

// ---------------------------------------------------------------------------
// Oracle polynomial: sparse int64 Laurent polynomial.

struct IPoly {
    std::map<long, long long> c;

    static IPoly term(long long coeff, long exp) {
        IPoly p;
        if (coeff != 0)
            p.c[exp] = coeff;
        return p;
    }
    static IPoly constant(long long v) { return term(v, 0); }

    bool zero() const { return c.empty(); }

    IPoly operator+(const IPoly& o) const {
        IPoly r = *this;
        for (auto& [e, v] : o.c) {
            r.c[e] += v;
            if (r.c[e] == 0)
                r.c.erase(e);
        }
        return r;
    }
    IPoly operator-(const IPoly& o) const {
        IPoly r = *this;
        for (auto& [e, v] : o.c) {
            r.c[e] -= v;
            if (r.c[e] == 0)
                r.c.erase(e);
        }
        return r;
    }
    IPoly operator*(const IPoly& o) const {
        IPoly r;
        for (auto& [e1, v1] : c)
            for (auto& [e2, v2] : o.c) {
                r.c[e1 + e2] += v1 * v2;
                if (r.c[e1 + e2] == 0)
                    r.c.erase(e1 + e2);
            }
        return r;
    }
    bool operator==(const IPoly& o) const { return c == o.c; }
};

inline IPoly from_laurent(const kq::LaurentPoly& p) {
    IPoly r;
    for (const auto& [e, coeff] : p.terms())
        r.c[e] = coeff.convert_to<long long>();
    return r;
}

inline kq::LaurentPoly to_laurent(const IPoly& p) {
    kq::LaurentPoly r;
    for (const auto& [e, v] : p.c)
        r += kq::LaurentPoly::term(kq::BigInt(v), e);
    return r;
}

// Exact division in Z[t, t^-1] with int64 arithmetic; false when b does not
// divide a. Dense long-division, independent of the library routine.
inline bool ipoly_divides(const IPoly& b, const IPoly& a, IPoly* quotient = nullptr) {
    if (b.zero())
        return a.zero();
    if (a.zero()) {
        if (quotient)
            *quotient = IPoly();
        return true;
    }
    long sa = a.c.begin()->first, sb = b.c.begin()->first;
    long da = a.c.rbegin()->first - sa, db = b.c.rbegin()->first - sb;
    if (da < db)
        return false;
    std::vector<long long> ra(static_cast<size_t>(da) + 1, 0), rb(static_cast<size_t>(db) + 1, 0);
    for (auto& [e, v] : a.c)
        ra[static_cast<size_t>(e - sa)] = v;
    for (auto& [e, v] : b.c)
        rb[static_cast<size_t>(e - sb)] = v;
    std::vector<long long> q(static_cast<size_t>(da - db) + 1, 0);
    for (long pos = da - db; pos >= 0; --pos) {
        long long lead = ra[static_cast<size_t>(pos + db)];
        if (lead == 0)
            continue;
        if (lead % rb[static_cast<size_t>(db)] != 0)
            return false;
        long long f = lead / rb[static_cast<size_t>(db)];
        q[static_cast<size_t>(pos)] = f;
        for (long j = 0; j <= db; ++j)
            ra[static_cast<size_t>(pos + j)] -= f * rb[static_cast<size_t>(j)];
    }
    for (long long v : ra)
        if (v != 0)
            return false;
    if (quotient) {
        IPoly qq;
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                qq.c[static_cast<long>(i) + sa - sb] = q[i];
        *quotient = qq;
    }
    return true;
}

// Cofactor-expansion determinant of a k x k block of an LMatrix, entirely in
// oracle arithmetic.
inline IPoly oracle_det(const std::vector<std::vector<IPoly>>& m) {
    const size_t n = m.size();
    if (n == 0)
        return IPoly::constant(1);
    if (n == 1)
        return m[0][0];
    IPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].zero())
            continue;
        std::vector<std::vector<IPoly>> sub(n - 1, std::vector<IPoly>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t col = 0; col < n; ++col) {
                if (col == j)
                    continue;
                sub[r - 1][cc++] = m[r][col];
            }
        }
        IPoly piece = m[0][j] * oracle_det(sub);
        acc = (j % 2 == 0) ? acc + piece : acc - piece;
    }
    return acc;
}

// All k x k minors of an LMatrix, as oracle polynomials.
inline std::vector<IPoly> oracle_minors(const kq::LMatrix& m, int k) {
    std::vector<IPoly> out;
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
    auto first = [&](std::vector<int>& s) {
        for (int i = 0; i < k; ++i)
            s[static_cast<size_t>(i)] = i;
    };
    auto next = [&](std::vector<int>& s, int n) {
        int i = k - 1;
        while (i >= 0 && s[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++s[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
        return true;
    };
    first(rows);
    do {
        first(cols);
        do {
            std::vector<std::vector<IPoly>> sub(static_cast<size_t>(k),
                                                std::vector<IPoly>(static_cast<size_t>(k)));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    sub[static_cast<size_t>(r)][static_cast<size_t>(c)] = from_laurent(
                        m.at(rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)]));
            out.push_back(oracle_det(sub));
        } while (next(cols, m.cols()));
    } while (next(rows, m.rows()));
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force coloring count: every assignment checked against every
// crossing, no propagation, no backtracking.

inline std::uint64_t brute_force_colorings(const kq::Diagram& d, const kq::FiniteQuandle& q) {
    std::vector<int> assign(static_cast<size_t>(d.arcs), 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& c : d.crossings) {
            int in = assign[static_cast<size_t>(c.under_in - 1)];
            int over = assign[static_cast<size_t>(c.over - 1)];
            int out = assign[static_cast<size_t>(c.under_out - 1)];
            int expect = c.sign > 0 ? q.op(in, over) : q.op_inv(in, over);
            if (expect != out) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++count;
        int i = 0;
        while (i < d.arcs && ++assign[static_cast<size_t>(i)] == q.size()) {
            assign[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == d.arcs)
            break;
    }
    return count;
}

// Units mod n.
inline std::vector<long long> units_mod(int n) {
    std::vector<long long> u;
    for (long long m = 1; m < n; ++m)
        if (std::gcd(m, static_cast<long long>(n)) == 1)
            u.push_back(m);
    return u;
}

} // namespace kqtest

#include "kq/lmatrix.hpp"

#include "kq/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace kq {

std::string LMatrix::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    auto entries = nlohmann::ordered_json::array();
    for (int r = 0; r < rows_; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < cols_; ++c)
            row.push_back(at(r, c).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

LMatrix LMatrix::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs rows, cols, entries");
    LMatrix m(j["rows"].get<int>(), j["cols"].get<int>());
    const auto& entries = j["entries"];
    if (static_cast<int>(entries.size()) != m.rows())
        throw ParseError("matrix JSON: row count mismatch");
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(entries[r].size()) != m.cols())
            throw ParseError("matrix JSON: column count mismatch");
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = LaurentPoly::parse(entries[r][c].get<std::string>());
    }
    return m;
}

LaurentPoly det(const LMatrix& m) {
    if (m.rows() != m.cols())
        throw std::logic_error("det of non-square matrix");
    const int n = m.rows();
    if (n == 0)
        return LaurentPoly::one();
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[r][c] = m.at(r, c);

    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!a[r][k].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return LaurentPoly();
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("Bareiss division failed");
                a[i][j] = std::move(*q);
            }
            a[i][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    LaurentPoly d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

namespace {

// Visits k-subsets of 0..n-1 in lexicographic order.
bool next_subset(std::vector<int>& sel, int n) {
    int k = static_cast<int>(sel.size());
    int i = k - 1;
    while (i >= 0 && sel[i] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++sel[i];
    for (int j = i + 1; j < k; ++j)
        sel[j] = sel[j - 1] + 1;
    return true;
}

std::vector<int> first_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i)
        s[i] = i;
    return s;
}

} // namespace

LaurentPoly mat_minor_gcd(const LMatrix& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw BadMinorSize("minor size " + std::to_string(k) + " out of range for " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    LaurentPoly g;
    std::vector<int> rows = first_subset(k);
    do {
        std::vector<int> cols = first_subset(k);
        do {
            LMatrix sub(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    sub.at(r, c) = m.at(rows[r], cols[c]);
            g = lp_gcd(g, det(sub));
            if (g.is_one())
                return g;
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return normalized(g);
}

std::vector<LaurentPoly> alexander_polys(const LMatrix& m) {
    std::vector<LaurentPoly> out;
    out.reserve(m.cols());
    for (int n = 1; n <= m.cols(); ++n)
        out.push_back(delta_poly(m, n));
    return out;
}

LaurentPoly delta_poly(const LMatrix& m, int n) {
    if (n < 1)
        throw BadMinorSize("delta index must be positive");
    const int size = m.cols() - n + 1;
    if (0 < m.rows() && m.rows() < size)
        return LaurentPoly();
    if (0 < size && size <= m.rows())
        return mat_minor_gcd(m, size);
    return LaurentPoly::one();
}

LMatrix block_diag(const LMatrix& a, const LMatrix& b) {
    LMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
    return m;
}

} // namespace kq

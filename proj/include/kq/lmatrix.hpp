#pragma once

#include "kq/laurent.hpp"

#include <string>
#include <vector>

namespace kq {

/// Dense matrix over Lambda = Z[t,t^-1]. Rows are relations, columns are
/// generators when used as a presentation matrix.
class LMatrix {
public:
    LMatrix() : rows_(0), cols_(0) {}
    LMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const LaurentPoly& at(int r, int c) const { return entries_[idx(r, c)]; }
    LaurentPoly& at(int r, int c) { return entries_[idx(r, c)]; }

    bool operator==(const LMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    /// Canonical JSON form: {"rows": m, "cols": r, "entries": [["...", ...]]}
    /// with entries in the canonical polynomial text form.
    std::string to_json() const;
    static LMatrix from_json(const std::string& text);

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }
    int rows_, cols_;
    std::vector<LaurentPoly> entries_;
};

/// Exact determinant of a square matrix (fraction-free Bareiss elimination
/// with row pivoting; all divisions are exact in Lambda).
LaurentPoly det(const LMatrix& m);

/// Normalized GCD of all k x k minors; 0 when every minor vanishes.
/// Enumeration stops early once the running GCD becomes 1.
/// Throws BadMinorSize unless 1 <= k <= min(rows, cols).
LaurentPoly mat_minor_gcd(const LMatrix& m, int k);

/// The Alexander polynomials Delta_1 .. Delta_r of a presentation matrix
/// (r = column count), each in normalized form. Delta_n is the GCD of the
/// (r-n+1)-minors when 0 < r-n+1 <= m, zero when 0 < m < r-n+1, and 1
/// otherwise (in particular for a matrix with no rows).
std::vector<LaurentPoly> alexander_polys(const LMatrix& m);

/// Delta_n for any n >= 1; indices beyond the column count fall into the
/// "otherwise" branch and give 1.
LaurentPoly delta_poly(const LMatrix& m, int n);

/// Block-diagonal assembly [[a, 0], [0, b]].
LMatrix block_diag(const LMatrix& a, const LMatrix& b);

} // namespace kq

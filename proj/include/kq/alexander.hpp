#pragma once

#include "kq/lmatrix.hpp"
#include "kq/presentation.hpp"

#include <utility>
#include <vector>

namespace kq {

/// A primary relation rewritten as a chain of signed right translations
/// applied to a generator: R_{s1}^{c1} ... R_{sn}^{cn}(y) = z, with the
/// steps listed in application order (s1 acts first). Runs of the same
/// generator are collapsed, so the |ci| may exceed 1.
struct TranslationForm {
    std::vector<std::pair<Sym, long>> steps;
    Sym y;
    Sym z;
};

/// Canonicalizes a primary relation. Throws NotPrimary when either side
/// mentions a symbol outside the presentation's primary generators.
TranslationForm normalize_relation(const QPresentation& p, const QRelation& r);

/// Presentation matrix of the Alexander module: one row per relation, one
/// column per generator in symbol order. Row coefficients follow the
/// linearization of the translation chain: the step applied j-th from the
/// end contributes t^(sum of later exponents) (1 - t^(c_j)), the translated
/// generator contributes t^(sum of all exponents), and the right-hand
/// generator contributes -1.
LMatrix linearize_full(const QPresentation& p);

/// linearize_full with the basepoint column removed (the first generator in
/// symbol order is sent to zero). Throws NotPrimary for general
/// presentations.
LMatrix linearize(const QPresentation& p);

/// n-th Alexander polynomial of a primary presentation, normalized.
LaurentPoly delta(const QPresentation& p, int n);

/// Formal cyclic factors of the module presented by m, read off the Delta
/// list: Delta_(k-1), Delta_(k-2)/Delta_(k-1), ..., Delta_1/Delta_2 where k
/// is the smallest index with Delta_k a unit. Each factor carries an
/// exactness flag; when the division is not exact in Lambda the unreduced
/// numerator is reported with the flag false.
std::vector<std::pair<LaurentPoly, bool>> module_factors(const LMatrix& m);

struct AffineColorability {
    bool colorable = false;
    /// Delta_1 = 0 (links / degenerate inputs): reported as colorable, with
    /// this flag raised as a warning.
    bool delta1_zero = false;
    LaurentPoly delta1;
};

/// Colorability by some affine quandle: not colorable exactly when
/// Delta_1 = 1.
AffineColorability affine_colorability(const LMatrix& m);
AffineColorability affine_colorability(const QPresentation& p);

/// The affine quandle Aff(Lambda/(Delta_1), t) that colors the knot, plus
/// the data of the witness map: j is the largest index with
/// Delta_j/Delta_(j+1) not a unit and multiplier = Delta_(j+1) generates the
/// image ideal. Throws NotColorable when Delta_1 = 1.
struct ColoringTarget {
    LaurentPoly delta1;
    int j = 0;
    LaurentPoly multiplier;
};

ColoringTarget coloring_target(const LMatrix& m);
ColoringTarget coloring_target(const QPresentation& p);

} // namespace kq

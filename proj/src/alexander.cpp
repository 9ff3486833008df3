#include "kq/alexander.hpp"

#include "kq/errors.hpp"

#include <algorithm>
#include <map>

namespace kq {

TranslationForm normalize_relation(const QPresentation& p, const QRelation& r) {
    auto check = [&](Sym s) {
        if (!p.has_primary_gen(s))
            throw NotPrimary("relation '" + r.str() + "' mentions non-primary symbol " + s.str());
    };
    check(r.lhs.base);
    check(r.rhs.base);
    GroupWord w = r.lhs.word;
    w.append(r.rhs.word.inverse());
    FqElement lhs(r.lhs.base, std::move(w)); // re-reduces against the base

    TranslationForm form;
    form.y = lhs.base;
    form.z = r.rhs.base;
    const auto& letters = lhs.word.letters();
    size_t i = 0;
    while (i < letters.size()) {
        check(letters[i].sym);
        size_t j = i;
        while (j < letters.size() && letters[j].sym == letters[i].sym &&
               letters[j].exp == letters[i].exp)
            ++j;
        form.steps.emplace_back(letters[i].sym, static_cast<long>(j - i) * letters[i].exp);
        i = j;
    }
    return form;
}

LMatrix linearize_full(const QPresentation& p) {
    if (!p.is_primary())
        throw NotPrimary("linearize needs a primary presentation");
    std::vector<Sym> gens = p.primary_gens;
    std::sort(gens.begin(), gens.end());
    std::map<Sym, int> column;
    for (size_t i = 0; i < gens.size(); ++i)
        column[gens[i]] = static_cast<int>(i);

    LMatrix m(static_cast<int>(p.primary_rels.size()), static_cast<int>(gens.size()));
    for (size_t ri = 0; ri < p.primary_rels.size(); ++ri) {
        TranslationForm form = normalize_relation(p, p.primary_rels[ri]);
        int row = static_cast<int>(ri);
        long suffix = 0; // sum of exponents of later-applied steps
        for (auto it = form.steps.rbegin(); it != form.steps.rend(); ++it) {
            const auto& [sym, c] = *it;
            LaurentPoly coeff = LaurentPoly::t(suffix) - LaurentPoly::t(suffix + c);
            m.at(row, column[sym]) += coeff;
            suffix += c;
        }
        m.at(row, column[form.y]) += LaurentPoly::t(suffix);
        m.at(row, column[form.z]) -= LaurentPoly::one();
    }
    return m;
}

LMatrix linearize(const QPresentation& p) {
    LMatrix full = linearize_full(p);
    if (full.cols() == 0)
        return full;
    LMatrix m(full.rows(), full.cols() - 1);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = full.at(r, c + 1);
    return m;
}

LaurentPoly delta(const QPresentation& p, int n) { return delta_poly(linearize(p), n); }

std::vector<std::pair<LaurentPoly, bool>> module_factors(const LMatrix& m) {
    std::vector<LaurentPoly> deltas = alexander_polys(m);
    auto delta_at = [&](int n) {
        return n <= static_cast<int>(deltas.size()) ? deltas[static_cast<size_t>(n - 1)]
                                                    : LaurentPoly::one();
    };
    int k = 1;
    while (!delta_at(k).is_one())
        ++k;
    std::vector<std::pair<LaurentPoly, bool>> factors;
    for (int i = k - 1; i >= 1; --i) {
        auto q = divide_exact(delta_at(i), delta_at(i + 1));
        if (q)
            factors.emplace_back(normalized(*q), true);
        else
            factors.emplace_back(delta_at(i), false);
    }
    return factors;
}

AffineColorability affine_colorability(const LMatrix& m) {
    AffineColorability r;
    r.delta1 = delta_poly(m, 1);
    r.colorable = !r.delta1.is_one();
    r.delta1_zero = r.delta1.is_zero();
    return r;
}

AffineColorability affine_colorability(const QPresentation& p) {
    return affine_colorability(linearize(p));
}

ColoringTarget coloring_target(const LMatrix& m) {
    std::vector<LaurentPoly> deltas = alexander_polys(m);
    auto delta_at = [&](int n) {
        return n <= static_cast<int>(deltas.size()) ? deltas[static_cast<size_t>(n - 1)]
                                                    : LaurentPoly::one();
    };
    ColoringTarget t;
    t.delta1 = delta_at(1);
    if (t.delta1.is_one())
        throw NotColorable("Delta_1 = 1: not colorable by any affine quandle");
    int j = 1;
    for (int i = std::max(1, m.cols()); i >= 1; --i) {
        auto q = divide_exact(delta_at(i), delta_at(i + 1));
        if (!q || !q->is_one()) {
            j = i;
            break;
        }
    }
    t.j = j;
    t.multiplier = delta_at(j + 1);
    return t;
}

ColoringTarget coloring_target(const QPresentation& p) { return coloring_target(linearize(p)); }

} // namespace kq

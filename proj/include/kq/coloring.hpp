#pragma once

#include "kq/diagram.hpp"
#include "kq/finiteq.hpp"
#include "kq/lmatrix.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace kq {

/// Assignment arc id -> quandle element index. Valid when every crossing
/// satisfies its sign-appropriate relation.
using Coloring = std::map<int, int>;

struct ColoringCount {
    std::uint64_t count = 0;
    std::vector<Coloring> samples; // first few colorings in search order
};

/// Exact number of colorings of a classical diagram by a finite quandle
/// (trivial colorings included), by backtracking with forward propagation
/// in arc-trace order. Optionally returns the first `keep_samples`
/// colorings found.
ColoringCount count_colorings(const Diagram& d, const FiniteQuandle& q, size_t keep_samples = 0);

/// First nonconstant coloring in deterministic search order, if any.
std::optional<Coloring> find_nontrivial_coloring(const Diagram& d, const FiniteQuandle& q);

struct AffineColoringCount {
    std::uint64_t count = 0;
    /// Number of independent generators of the solution module over Z_n.
    int kernel_rank = 0;
    std::optional<Coloring> sample; // a nonconstant coloring, when one exists
};

/// Colorings by Aff(Z_n, m) via the linear system over Z_n: per positive
/// crossing  m(under_in) + (1-m)(over) - (under_out) = 0, and with m^-1 in
/// place of m for negative crossings. Solved exactly by integer
/// diagonalization. Throws NotAUnit when gcd(m, n) != 1.
AffineColoringCount affine_colorings(const Diagram& d, int n, long long m);

/// Number of colorings of the knot underlying a presentation matrix by
/// Aff(Z_n, m): n times the number of solutions of M(m) v = 0 over Z_n,
/// where M(m) evaluates every entry at t = m (m a unit mod n).
std::uint64_t affine_coloring_count(const LMatrix& m_of_t, int n, long long m);

} // namespace kq

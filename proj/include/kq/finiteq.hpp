#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kq {

using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& f, const Perm& g); // (f g)(x) = f(g(x))
Perm perm_inverse(const Perm& f);

/// Permutation group given by generators, with its elements enumerated by
/// breadth-first closure up to a cap (GroupTooLarge beyond it). Elements are
/// kept sorted so membership tests are binary searches.
class PermGroup {
public:
    static constexpr size_t default_cap = 1000000;

    static PermGroup closure(int degree, std::vector<Perm> gens, size_t cap = default_cap);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }

    bool contains(const Perm& p) const;
    bool is_trivial() const { return order() == 1; }

    /// Orbit partition, each orbit sorted, orbits ordered by least element.
    std::vector<std::vector<int>> orbits() const;

    bool is_abelian() const;
    /// No non-identity element fixes a point.
    bool is_semiregular() const;

    /// Commutator subgroup: closure of all commutators of group elements.
    PermGroup derived_subgroup(size_t cap = default_cap) const;

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
};

/// Finite quandle as a Cayley table, 0-indexed: table[i][j] = i * j.
class FiniteQuandle {
public:
    /// Validates the three quandle axioms; error messages carry a witness.
    /// Throws NotIdempotent / NotBijective / NotDistributive, and
    /// ValidationError for a malformed table.
    static FiniteQuandle from_table(std::vector<std::vector<int>> table);

    /// Aff(Z_n, m): i * j = (m i + (1 - m) j) mod n. Throws NotAUnit when
    /// gcd(m, n) != 1, ValidationError for n < 1.
    static FiniteQuandle affine(int n, long long m);

    static FiniteQuandle from_json(const std::string& text);
    std::string to_json() const;

    int size() const { return n_; }
    int op(int i, int j) const { return table_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    /// i *~ j, the inverse of the right translation by j.
    int op_inv(int i, int j) const {
        return inv_table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const std::vector<std::vector<int>>& table() const { return table_; }

    /// Right translation by y as a permutation.
    Perm right_translation(int y) const;

    bool operator==(const FiniteQuandle& o) const { return table_ == o.table_; }

    /// Empty placeholder; real instances come from the factory functions.
    FiniteQuandle() = default;

private:
    void build_inverse();
    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inv_table_;
};

struct InnDis {
    PermGroup inn;
    PermGroup dis;
};

/// Inn(Q) = <R_x> and Dis(Q) = <R_x R_y^-1>, both enumerated.
InnDis inn_dis(const FiniteQuandle& q, size_t cap = PermGroup::default_cap);

std::vector<std::vector<int>> orbits(const PermGroup& g);

bool is_connected(const FiniteQuandle& q, size_t cap = PermGroup::default_cap);

/// Dis(Q) abelian and semiregular.
bool is_abelian_quandle(const FiniteQuandle& q, size_t cap = PermGroup::default_cap);

struct Congruence {
    std::vector<int> class_of;  // element -> class index
    std::vector<std::vector<int>> classes;
    FiniteQuandle quotient;
};

/// Congruence induced by the orbit decomposition of N. N must be normalized
/// by the ambient group (checked on generators; NotNormal otherwise) and the
/// quotient operation is verified to be well defined on classes
/// (NotWellDefined with a witness otherwise).
Congruence congruence_from_normal(const FiniteQuandle& q, const PermGroup& n,
                                  const PermGroup& ambient);

/// Quotient by the orbit decomposition of the derived subgroup of Dis(Q),
/// for connected Q (NotConnected otherwise). The result is checked to be
/// connected and abelian.
Congruence gamma_quotient(const FiniteQuandle& q, size_t cap = PermGroup::default_cap);

} // namespace kq

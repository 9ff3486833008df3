#pragma once

#include "kq/diagram.hpp"

#include <compare>
#include <string>
#include <vector>

namespace kq {

/// Generator symbols. Primary generators print as x<i>, operator generators
/// as a<i>, and companion (Wirtinger) generators as y<i>. Ordering is by
/// class, then index, so x1 < x2 < x10.
enum class SymKind : int { primary = 0, op = 1, wirt = 2 };

struct Sym {
    SymKind kind = SymKind::primary;
    int index = 0;

    auto operator<=>(const Sym&) const = default;
    std::string str() const;

    static Sym x(int i) { return {SymKind::primary, i}; }
    static Sym a(int i) { return {SymKind::op, i}; }
    static Sym y(int i) { return {SymKind::wirt, i}; }
};

/// A letter of a freely reduced word: generator to the power +1 or -1.
struct Letter {
    Sym sym;
    int exp = 1;

    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in the free group on the generator symbols.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(Sym s, int exp = 1) { append(s, exp); }

    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    /// Appends one letter, cancelling against the current last letter.
    void append(Sym s, int exp);
    void append(const GroupWord& w);

    GroupWord inverse() const;
    GroupWord pow(long k) const;
    friend GroupWord operator*(GroupWord a, const GroupWord& b) {
        a.append(b);
        return a;
    }

    /// [a, b] = a b a^-1 b^-1
    static GroupWord commutator(const GroupWord& a, const GroupWord& b);

    bool operator==(const GroupWord&) const = default;

    /// Space-separated letters with collapsed runs, e.g. "y1^2 x2^-1".
    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/// Element [base, word] of an extended free quandle, kept ip-reduced: the
/// word never begins with base^(+-1).
struct FqElement {
    Sym base;
    GroupWord word;

    FqElement() = default;
    FqElement(Sym b, GroupWord w);

    bool operator==(const FqElement&) const = default;
    std::string str() const;
};

/// x * y (inverse = false) or x *~ y (inverse = true):
/// [a,w] * [b,z] = [a, w z^-1 b z].
FqElement fq_mult(const FqElement& x, const FqElement& y, bool inverse = false);

/// Right action by a group word: [a, w] -> [a, w g].
FqElement fq_act(const FqElement& x, const GroupWord& g);

/// Augmentation eps([a, w]) = w^-1 a w.
GroupWord fq_augmentation(const FqElement& x);

struct QRelation {
    FqElement lhs;
    FqElement rhs;

    bool operator==(const QRelation&) const = default;
    std::string str() const;
};

/// Primary or general quandle presentation [S_P, S_O : R_P, R_O]. The
/// presentation is primary when the operator generator and relator lists
/// are empty.
struct QPresentation {
    std::vector<Sym> primary_gens;
    std::vector<Sym> operator_gens;
    std::vector<QRelation> primary_rels;
    std::vector<GroupWord> operator_rels;

    bool is_primary() const { return operator_gens.empty() && operator_rels.empty(); }
    bool has_primary_gen(Sym s) const;

    /// Text format used by the CLI and the golden tests.
    std::string str() const;
};

/// Group presentation <gens : relators> (Wirtinger presentations).
struct GroupPresentation {
    std::vector<Sym> gens;
    std::vector<GroupWord> relators;

    std::string str() const;
};

/// Knot/link quandle of a classical diagram: one generator per arc, one
/// relation per crossing. Throws WrongKind for non-classical diagrams.
QPresentation present_knot(const Diagram& d);

/// General presentation of the quandle of a link in the solid torus: one
/// operator generator a1, the crossing relations, one action relation per
/// axis pass, and a single commutator relator [a1, W] where W multiplies the
/// augmentations of the arcs passing the axis (in axis order, to the power
/// of the pass sign). For a pass of sign -1 the action relation and the
/// augmented arc are reversed, matching the diagrammatic chirality.
QPresentation present_solid_torus(const Diagram& d);

/// The solid-torus presentation plus the surgery relator a1^p W^-q.
QPresentation present_lens(const Diagram& d);

/// Sends every operator generator to the identity: operator letters are
/// deleted from all words, action relations x^a = y become merges x = y
/// (resolved by union-find, smallest index wins), and the remaining
/// relations are rewritten through the merge. Throws
/// NotSolidTorusPresentation when an operator relator survives deletion.
QPresentation close_in_sphere(const QPresentation& p);

/// Wirtinger presentation of the knot group from a classical diagram:
/// relator over^-1 under_in over under_out^-1 per positive crossing and the
/// inverse conjugation per negative crossing.
GroupPresentation wirtinger_group(const Diagram& d);

} // namespace kq

#include "kq/presentation.hpp"

#include "kq/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kq {

std::string Sym::str() const {
    const char* cls = kind == SymKind::primary ? "x" : kind == SymKind::op ? "a" : "y";
    return cls + std::to_string(index);
}

void GroupWord::append(Sym s, int exp) {
    if (exp != 1 && exp != -1)
        throw std::invalid_argument("letter exponent must be +-1");
    if (!letters_.empty() && letters_.back().sym == s && letters_.back().exp == -exp) {
        letters_.pop_back();
        return;
    }
    letters_.push_back({s, exp});
}

void GroupWord::append(const GroupWord& w) {
    for (const auto& l : w.letters_)
        append(l.sym, l.exp);
}

GroupWord GroupWord::inverse() const {
    GroupWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.append(it->sym, -it->exp);
    return r;
}

GroupWord GroupWord::pow(long k) const {
    GroupWord r;
    const GroupWord& base = *this;
    GroupWord inv = inverse();
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        r.append(k < 0 ? inv : base);
    return r;
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.append(b);
    r.append(a.inverse());
    r.append(b.inverse());
    return r;
}

std::string GroupWord::str() const {
    if (letters_.empty())
        return "1";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j].sym == letters_[i].sym &&
               letters_[j].exp == letters_[i].exp)
            ++j;
        long run = static_cast<long>(j - i) * letters_[i].exp;
        if (!first)
            out << " ";
        first = false;
        out << letters_[i].sym.str();
        if (run != 1)
            out << "^" << run;
        i = j;
    }
    return out.str();
}

namespace {

GroupWord ip_reduce(Sym base, GroupWord w) {
    // (a, w) ~ (a, a w): strip leading powers of the base symbol.
    while (!w.letters().empty() && w.letters().front().sym == base) {
        GroupWord stripped;
        for (size_t i = 1; i < w.letters().size(); ++i)
            stripped.append(w.letters()[i].sym, w.letters()[i].exp);
        w = std::move(stripped);
    }
    return w;
}

} // namespace

FqElement::FqElement(Sym b, GroupWord w) : base(b), word(ip_reduce(b, std::move(w))) {}

std::string FqElement::str() const {
    if (word.empty())
        return base.str();
    bool chain = true;
    for (const auto& l : word.letters())
        if (l.sym.kind != SymKind::primary || l.exp != 1)
            chain = false;
    std::ostringstream out;
    out << base.str();
    if (chain) {
        for (const auto& l : word.letters())
            out << " * " << l.sym.str();
    } else {
        out << " ^ " << word.str();
    }
    return out.str();
}

FqElement fq_mult(const FqElement& x, const FqElement& y, bool inverse) {
    GroupWord w = x.word;
    w.append(y.word.inverse());
    w.append(y.base, inverse ? -1 : 1);
    w.append(y.word);
    return FqElement(x.base, std::move(w));
}

FqElement fq_act(const FqElement& x, const GroupWord& g) {
    GroupWord w = x.word;
    w.append(g);
    return FqElement(x.base, std::move(w));
}

GroupWord fq_augmentation(const FqElement& x) {
    GroupWord w = x.word.inverse();
    w.append(x.base, 1);
    w.append(x.word);
    return w;
}

std::string QRelation::str() const { return lhs.str() + " = " + rhs.str(); }

bool QPresentation::has_primary_gen(Sym s) const {
    return std::find(primary_gens.begin(), primary_gens.end(), s) != primary_gens.end();
}

namespace {

// Prints a relator as "[u, v]" when it literally has commutator shape
// u v u^-1 v^-1 with u a single letter, else as a bare word.
std::string relator_str(const GroupWord& w) {
    const auto& ls = w.letters();
    const size_t n = ls.size();
    if (n >= 4 && n % 2 == 0) {
        size_t half = n / 2 - 1; // length of v
        // candidate split: u = ls[0], v = ls[1..half], then u^-1, v^-1
        if (ls[half + 1].sym == ls[0].sym && ls[half + 1].exp == -ls[0].exp) {
            bool ok = true;
            for (size_t i = 0; i < half; ++i) {
                const Letter& fwd = ls[1 + i];
                const Letter& bwd = ls[n - 1 - i];
                if (bwd.sym != fwd.sym || bwd.exp != -fwd.exp) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                GroupWord u(ls[0].sym, ls[0].exp), v;
                for (size_t i = 0; i < half; ++i)
                    v.append(ls[1 + i].sym, ls[1 + i].exp);
                return "[" + u.str() + ", " + v.str() + "]";
            }
        }
    }
    return w.str();
}

} // namespace

std::string QPresentation::str() const {
    std::ostringstream out;
    out << "primary:";
    for (const auto& g : primary_gens)
        out << " " << g.str();
    out << "\n";
    if (!operator_gens.empty()) {
        out << "operators:";
        for (const auto& g : operator_gens)
            out << " " << g.str();
        out << "\n";
    }
    for (const auto& r : primary_rels)
        out << "rel: " << r.str() << "\n";
    for (const auto& w : operator_rels)
        out << "oprel: " << relator_str(w) << "\n";
    return out.str();
}

std::string GroupPresentation::str() const {
    std::ostringstream out;
    out << "generators:";
    for (const auto& g : gens)
        out << " " << g.str();
    out << "\n";
    for (const auto& w : relators)
        out << "relator: " << w.str() << "\n";
    return out.str();
}

namespace {

std::vector<Sym> arc_symbols(const Diagram& d, SymKind kind) {
    std::vector<Sym> gens;
    gens.reserve(static_cast<size_t>(d.arcs));
    for (int i = 1; i <= d.arcs; ++i)
        gens.push_back({kind, i});
    return gens;
}

QRelation crossing_relation(const Crossing& c) {
    // sign +1: under_in * over = under_out; sign -1 swaps the under arcs.
    int in = c.sign > 0 ? c.under_in : c.under_out;
    int out = c.sign > 0 ? c.under_out : c.under_in;
    return {FqElement(Sym::x(in), GroupWord(Sym::x(c.over))), FqElement(Sym::x(out), {})};
}

} // namespace

QPresentation present_knot(const Diagram& d) {
    if (d.kind != DiagramKind::classical)
        throw WrongKind("present_knot needs a classical diagram");
    QPresentation p;
    p.primary_gens = arc_symbols(d, SymKind::primary);
    for (const auto& c : d.crossings)
        p.primary_rels.push_back(crossing_relation(c));
    return p;
}

QPresentation present_solid_torus(const Diagram& d) {
    if (d.kind != DiagramKind::solid_torus && d.kind != DiagramKind::lens)
        throw WrongKind("present_solid_torus needs a solid-torus diagram");
    QPresentation p;
    p.primary_gens = arc_symbols(d, SymKind::primary);
    const Sym a1 = Sym::a(1);
    p.operator_gens.push_back(a1);
    for (const auto& c : d.crossings)
        p.primary_rels.push_back(crossing_relation(c));
    GroupWord eps_product;
    for (const auto& pass : d.axis) {
        // The arc on the near side of the axis both closes the action
        // relation and passes over the axis curve; which side that is
        // depends on the chirality of the pass.
        int acted = pass.sign > 0 ? pass.under_in : pass.under_out;
        int result = pass.sign > 0 ? pass.under_out : pass.under_in;
        p.primary_rels.push_back(
            {FqElement(Sym::x(acted), GroupWord(a1)), FqElement(Sym::x(result), {})});
        eps_product.append(Sym::x(result), pass.sign);
    }
    GroupWord rel = GroupWord::commutator(GroupWord(a1), eps_product);
    if (!rel.empty())
        p.operator_rels.push_back(std::move(rel));
    return p;
}

QPresentation present_lens(const Diagram& d) {
    if (d.kind != DiagramKind::lens)
        throw WrongKind("present_lens needs a lens diagram");
    QPresentation p = present_solid_torus(d);
    GroupWord mu;
    for (const auto& pass : d.axis)
        mu.append(Sym::x(pass.sign > 0 ? pass.under_out : pass.under_in), pass.sign);
    GroupWord rel = GroupWord(Sym::a(1)).pow(d.surgery->p);
    rel.append(mu.pow(-d.surgery->q));
    if (!rel.empty())
        p.operator_rels.push_back(std::move(rel));
    return p;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) {
        while (parent_[static_cast<size_t>(v)] != v) {
            parent_[static_cast<size_t>(v)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
            v = parent_[static_cast<size_t>(v)];
        }
        return v;
    }
    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b); // smallest index representative
        parent_[static_cast<size_t>(b)] = a;
    }

private:
    std::vector<int> parent_;
};

} // namespace

QPresentation close_in_sphere(const QPresentation& p) {
    if (p.is_primary())
        return p;
    std::set<Sym> operators(p.operator_gens.begin(), p.operator_gens.end());
    auto strip = [&](const GroupWord& w) {
        GroupWord r;
        for (const auto& l : w.letters())
            if (!operators.count(l.sym))
                r.append(l.sym, l.exp);
        return r;
    };
    for (const auto& w : p.operator_rels)
        if (!strip(w).empty())
            throw NotSolidTorusPresentation(
                "operator relator '" + w.str() + "' survives killing the operator generators");

    // First pass: collect the merges forced by relations that collapse to
    // generator equalities, then rewrite what remains.
    int max_index = 0;
    for (const auto& g : p.primary_gens)
        max_index = std::max(max_index, g.index);
    UnionFind uf(max_index + 1);
    std::vector<QRelation> kept;
    for (const auto& r : p.primary_rels) {
        FqElement l(r.lhs.base, strip(r.lhs.word));
        FqElement h(r.rhs.base, strip(r.rhs.word));
        if (l.word.empty() && h.word.empty()) {
            if (l.base != h.base)
                uf.merge(l.base.index, h.base.index);
            continue;
        }
        kept.push_back({std::move(l), std::move(h)});
    }

    auto rep = [&](Sym s) { return Sym::x(uf.find(s.index)); };
    QPresentation out;
    for (const auto& g : p.primary_gens)
        if (uf.find(g.index) == g.index)
            out.primary_gens.push_back(g);
    for (const auto& r : kept) {
        GroupWord lw, hw;
        for (const auto& l : r.lhs.word.letters())
            lw.append(rep(l.sym), l.exp);
        for (const auto& l : r.rhs.word.letters())
            hw.append(rep(l.sym), l.exp);
        QRelation rewritten{FqElement(rep(r.lhs.base), std::move(lw)),
                            FqElement(rep(r.rhs.base), std::move(hw))};
        if (rewritten.lhs == rewritten.rhs)
            continue;
        out.primary_rels.push_back(std::move(rewritten));
    }
    return out;
}

GroupPresentation wirtinger_group(const Diagram& d) {
    if (d.kind != DiagramKind::classical)
        throw WrongKind("wirtinger_group needs a classical diagram");
    GroupPresentation g;
    g.gens = arc_symbols(d, SymKind::wirt);
    for (const auto& c : d.crossings) {
        GroupWord w;
        w.append(Sym::y(c.over), -c.sign);
        w.append(Sym::y(c.under_in), 1);
        w.append(Sym::y(c.over), c.sign);
        w.append(Sym::y(c.under_out), -1);
        g.relators.push_back(std::move(w));
    }
    return g;
}

} // namespace kq

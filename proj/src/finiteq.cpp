#include "kq/finiteq.hpp"

#include "kq/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace kq {

Perm perm_identity(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = f[static_cast<size_t>(g[i])];
    return r;
}

Perm perm_inverse(const Perm& f) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[static_cast<size_t>(f[i])] = static_cast<int>(i);
    return r;
}

PermGroup PermGroup::closure(int degree, std::vector<Perm> gens, size_t cap) {
    PermGroup g;
    g.degree_ = degree;
    Perm id = perm_identity(degree);
    for (auto& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw ValidationError("generator degree mismatch");
        if (p != id)
            g.gens_.push_back(p);
    }
    std::set<Perm> seen;
    seen.insert(id);
    std::deque<Perm> frontier;
    frontier.push_back(id);
    while (!frontier.empty()) {
        Perm cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : g.gens_) {
            Perm next = perm_compose(gen, cur);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw GroupTooLarge("group closure exceeded cap of " + std::to_string(cap));
                frontier.push_back(std::move(next));
            }
        }
    }
    g.elements_.assign(seen.begin(), seen.end());
    return g;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> orbit_of(static_cast<size_t>(degree_), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < degree_; ++start) {
        if (orbit_of[static_cast<size_t>(start)] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        std::vector<int> orbit;
        std::deque<int> frontier{start};
        orbit_of[static_cast<size_t>(start)] = id;
        while (!frontier.empty()) {
            int x = frontier.front();
            frontier.pop_front();
            orbit.push_back(x);
            for (const auto& gen : gens_) {
                for (int y : {gen[static_cast<size_t>(x)],
                              perm_inverse(gen)[static_cast<size_t>(x)]}) {
                    if (orbit_of[static_cast<size_t>(y)] < 0) {
                        orbit_of[static_cast<size_t>(y)] = id;
                        frontier.push_back(y);
                    }
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool PermGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (perm_compose(gens_[i], gens_[j]) != perm_compose(gens_[j], gens_[i]))
                return false;
    return true;
}

bool PermGroup::is_semiregular() const {
    Perm id = perm_identity(degree_);
    for (const auto& e : elements_) {
        if (e == id)
            continue;
        for (int x = 0; x < degree_; ++x)
            if (e[static_cast<size_t>(x)] == x)
                return false;
    }
    return true;
}

PermGroup PermGroup::derived_subgroup(size_t cap) const {
    // The set of all commutators is closed under conjugation, so the
    // subgroup they generate is already the normal closure.
    std::set<Perm> comms;
    for (const auto& a : elements_)
        for (const auto& b : elements_) {
            Perm c = perm_compose(perm_compose(a, b),
                                  perm_compose(perm_inverse(a), perm_inverse(b)));
            comms.insert(std::move(c));
        }
    return closure(degree_, std::vector<Perm>(comms.begin(), comms.end()), cap);
}

FiniteQuandle FiniteQuandle::from_table(std::vector<std::vector<int>> table) {
    FiniteQuandle q;
    q.n_ = static_cast<int>(table.size());
    if (q.n_ == 0)
        throw ValidationError("quandle table must be nonempty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != q.n_)
            throw ValidationError("quandle table must be square");
        for (int v : row)
            if (v < 0 || v >= q.n_)
                throw ValidationError("quandle table entry out of range");
    }
    q.table_ = std::move(table);
    const int n = q.n_;
    for (int i = 0; i < n; ++i)
        if (q.op(i, i) != i)
            throw NotIdempotent("axiom 1 fails: " + std::to_string(i) + " * " + std::to_string(i) +
                                " != " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
        std::vector<bool> hit(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i) {
            int v = q.op(i, j);
            if (hit[static_cast<size_t>(v)])
                throw NotBijective("axiom 2 fails: right translation by " + std::to_string(j) +
                                   " is not a bijection");
            hit[static_cast<size_t>(v)] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (q.op(q.op(i, j), k) != q.op(q.op(i, k), q.op(j, k)))
                    throw NotDistributive("axiom 3 fails at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ", " + std::to_string(k) + ")");
    q.build_inverse();
    return q;
}

FiniteQuandle FiniteQuandle::affine(int n, long long m) {
    if (n < 1)
        throw ValidationError("modulus must be positive");
    long long mm = ((m % n) + n) % n;
    if (std::gcd(mm, static_cast<long long>(n)) != 1)
        throw NotAUnit(std::to_string(m) + " is not a unit mod " + std::to_string(n));
    std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<int>(((mm * i + (1 - mm) * j) % n + n) % n);
    return from_table(std::move(table));
}

void FiniteQuandle::build_inverse() {
    inv_table_.assign(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            inv_table_[static_cast<size_t>(op(i, j))][static_cast<size_t>(j)] = i;
}

Perm FiniteQuandle::right_translation(int y) const {
    Perm p(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        p[static_cast<size_t>(i)] = op(i, y);
    return p;
}

FiniteQuandle FiniteQuandle::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quandle JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("table"))
        throw ParseError("quandle JSON needs 'size' and 'table'");
    int n = j["size"].get<int>();
    auto table = j["table"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n)
        throw ParseError("quandle JSON: size does not match table");
    return from_table(std::move(table));
}

std::string FiniteQuandle::to_json() const {
    nlohmann::ordered_json j;
    j["size"] = n_;
    j["table"] = table_;
    return j.dump();
}

InnDis inn_dis(const FiniteQuandle& q, size_t cap) {
    std::vector<Perm> translations;
    translations.reserve(static_cast<size_t>(q.size()));
    for (int y = 0; y < q.size(); ++y)
        translations.push_back(q.right_translation(y));
    std::vector<Perm> dis_gens;
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y) {
            if (x == y)
                continue;
            dis_gens.push_back(
                perm_compose(translations[static_cast<size_t>(x)],
                             perm_inverse(translations[static_cast<size_t>(y)])));
        }
    InnDis r{PermGroup::closure(q.size(), translations, cap),
             PermGroup::closure(q.size(), dis_gens, cap)};
    return r;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) { return g.orbits(); }

bool is_connected(const FiniteQuandle& q, size_t cap) {
    return inn_dis(q, cap).dis.orbits().size() == 1;
}

bool is_abelian_quandle(const FiniteQuandle& q, size_t cap) {
    PermGroup dis = inn_dis(q, cap).dis;
    return dis.is_abelian() && dis.is_semiregular();
}

namespace {

Congruence quotient_by_partition(const FiniteQuandle& q,
                                 const std::vector<std::vector<int>>& classes) {
    Congruence c;
    c.classes = classes;
    c.class_of.assign(static_cast<size_t>(q.size()), -1);
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (int x : classes[ci])
            c.class_of[static_cast<size_t>(x)] = static_cast<int>(ci);

    const int k = static_cast<int>(classes.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(k),
                                        std::vector<int>(static_cast<size_t>(k), -1));
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b) {
            int ca = c.class_of[static_cast<size_t>(a)];
            int cb = c.class_of[static_cast<size_t>(b)];
            int cv = c.class_of[static_cast<size_t>(q.op(a, b))];
            int& cell = table[static_cast<size_t>(ca)][static_cast<size_t>(cb)];
            if (cell < 0)
                cell = cv;
            else if (cell != cv)
                throw NotWellDefined("quotient operation inconsistent on classes (" +
                                     std::to_string(ca) + ", " + std::to_string(cb) +
                                     ") witnessed by (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
        }
    c.quotient = FiniteQuandle::from_table(std::move(table));
    return c;
}

} // namespace

Congruence congruence_from_normal(const FiniteQuandle& q, const PermGroup& n,
                                  const PermGroup& ambient) {
    for (const auto& g : ambient.generators())
        for (const auto& h : n.generators()) {
            Perm conj = perm_compose(perm_compose(g, h), perm_inverse(g));
            if (!n.contains(conj))
                throw NotNormal("subgroup is not normalized by the ambient group");
        }
    return quotient_by_partition(q, n.orbits());
}

Congruence gamma_quotient(const FiniteQuandle& q, size_t cap) {
    InnDis groups = inn_dis(q, cap);
    if (groups.dis.orbits().size() != 1)
        throw NotConnected("gamma quotient needs a connected quandle");
    PermGroup derived = groups.dis.derived_subgroup(cap);
    Congruence c = quotient_by_partition(q, derived.orbits());
    if (!is_connected(c.quotient, cap) || !is_abelian_quandle(c.quotient, cap))
        throw std::logic_error("gamma quotient failed its abelian/connected postcondition");
    return c;
}

} // namespace kq

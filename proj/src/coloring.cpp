#include "kq/coloring.hpp"

#include "kq/errors.hpp"
#include "kq/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace kq {

namespace {

// Arcs in trace order: components visited by smallest arc id, each walked
// along the successor map so crossings start constraining early.
std::vector<int> trace_order(const Diagram& d) {
    std::vector<int> succ(static_cast<size_t>(d.arcs) + 1, 0);
    for (const auto& c : d.crossings)
        succ[static_cast<size_t>(c.under_in)] = c.under_out;
    std::vector<bool> seen(static_cast<size_t>(d.arcs) + 1, false);
    std::vector<int> order;
    for (int a = 1; a <= d.arcs; ++a) {
        int cur = a;
        while (cur != 0 && !seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            order.push_back(cur);
            cur = succ[static_cast<size_t>(cur)];
        }
    }
    return order;
}

struct SearchContext {
    const Diagram& d;
    const FiniteQuandle& q;
    std::vector<int> order;
    std::vector<int> color;     // arc -> color, -1 unassigned
    std::uint64_t count = 0;
    size_t keep_samples = 0;
    std::vector<Coloring> samples;
    bool stop_at_nonconstant = false;
    std::optional<Coloring> nonconstant;

    explicit SearchContext(const Diagram& dia, const FiniteQuandle& qu)
        : d(dia), q(qu), order(trace_order(dia)),
          color(static_cast<size_t>(dia.arcs) + 1, -1) {}

    int& at(int arc) { return color[static_cast<size_t>(arc)]; }

    // Forces colors along crossings whose inputs are known. Returns false on
    // a conflict; `touched` records arcs assigned here for rollback.
    bool propagate(std::vector<int>& touched) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& c : d.crossings) {
                int cin = at(c.under_in), cover = at(c.over), cout = at(c.under_out);
                if (cin >= 0 && cover >= 0) {
                    int forced = c.sign > 0 ? q.op(cin, cover) : q.op_inv(cin, cover);
                    if (cout < 0) {
                        at(c.under_out) = forced;
                        touched.push_back(c.under_out);
                        progress = true;
                    } else if (cout != forced) {
                        return false;
                    }
                } else if (cout >= 0 && cover >= 0 && cin < 0) {
                    int forced = c.sign > 0 ? q.op_inv(cout, cover) : q.op(cout, cover);
                    at(c.under_in) = forced;
                    touched.push_back(c.under_in);
                    progress = true;
                }
            }
        }
        return true;
    }

    bool complete() const {
        for (int a = 1; a <= d.arcs; ++a)
            if (color[static_cast<size_t>(a)] < 0)
                return false;
        return true;
    }

    Coloring snapshot() const {
        Coloring c;
        for (int a = 1; a <= d.arcs; ++a)
            c[a] = color[static_cast<size_t>(a)];
        return c;
    }

    bool is_constant() const {
        for (int a = 2; a <= d.arcs; ++a)
            if (color[static_cast<size_t>(a)] != color[1])
                return false;
        return true;
    }

    // Returns false to abort the whole search (nonconstant found).
    bool record() {
        if (stop_at_nonconstant) {
            if (!is_constant()) {
                nonconstant = snapshot();
                return false;
            }
            return true;
        }
        ++count;
        if (samples.size() < keep_samples)
            samples.push_back(snapshot());
        return true;
    }

    bool search(size_t pos) {
        while (pos < order.size() && at(order[pos]) >= 0)
            ++pos;
        if (pos == order.size()) {
            if (complete())
                return record();
            return true;
        }
        int arc = order[pos];
        for (int col = 0; col < q.size(); ++col) {
            at(arc) = col;
            std::vector<int> touched;
            if (propagate(touched)) {
                if (!search(pos + 1))
                    return false;
            }
            for (int t : touched)
                at(t) = -1;
            at(arc) = -1;
        }
        return true;
    }
};

} // namespace

ColoringCount count_colorings(const Diagram& d, const FiniteQuandle& q, size_t keep_samples) {
    if (d.kind != DiagramKind::classical)
        throw WrongKind("colorings need a classical diagram");
    SearchContext ctx(d, q);
    ctx.keep_samples = keep_samples;
    ctx.search(0);
    return {ctx.count, std::move(ctx.samples)};
}

std::optional<Coloring> find_nontrivial_coloring(const Diagram& d, const FiniteQuandle& q) {
    if (d.kind != DiagramKind::classical)
        throw WrongKind("colorings need a classical diagram");
    SearchContext ctx(d, q);
    ctx.stop_at_nonconstant = true;
    ctx.search(0);
    return ctx.nonconstant;
}

namespace {

long long mod_inverse(long long a, long long n) {
    long long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
    while (new_r != 0) {
        long long q = r / new_r;
        std::swap(t, new_t);
        new_t -= q * t;
        std::swap(r, new_r);
        new_r -= q * r;
    }
    if (r != 1)
        throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(n));
    return ((t % n) + n) % n;
}

struct DiagonalForm {
    std::vector<BigInt> diag;                 // nonzero diagonal entries
    std::vector<std::vector<BigInt>> v;       // accumulated column transform
    int cols = 0;
};

// Diagonalizes an integer matrix by unimodular row and column operations,
// tracking the column transform so solution vectors can be pulled back.
// (No divisibility chain is needed for counting solutions mod n.)
DiagonalForm diagonalize(std::vector<std::vector<BigInt>> a, int cols) {
    DiagonalForm f;
    f.cols = cols;
    f.v.assign(static_cast<size_t>(cols), std::vector<BigInt>(static_cast<size_t>(cols), 0));
    for (int i = 0; i < cols; ++i)
        f.v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    const int rows = static_cast<int>(a.size());

    auto abs_val = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };
    auto swap_cols = [&](int c1, int c2) {
        for (auto& row : a)
            std::swap(row[static_cast<size_t>(c1)], row[static_cast<size_t>(c2)]);
        for (auto& row : f.v)
            std::swap(row[static_cast<size_t>(c1)], row[static_cast<size_t>(c2)]);
    };
    auto add_col = [&](int dst, int src, const BigInt& k) { // col dst += k * col src
        for (auto& row : a)
            row[static_cast<size_t>(dst)] += k * row[static_cast<size_t>(src)];
        for (auto& row : f.v)
            row[static_cast<size_t>(dst)] += k * row[static_cast<size_t>(src)];
    };

    int p = 0;
    while (p < rows && p < cols) {
        // locate a nonzero entry of least magnitude in the remaining block
        int br = -1, bc = -1;
        for (int r = p; r < rows; ++r)
            for (int c = p; c < cols; ++c)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0 &&
                    (br < 0 || abs_val(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) <
                                   abs_val(a[static_cast<size_t>(br)][static_cast<size_t>(bc)]))) {
                    br = r;
                    bc = c;
                }
        if (br < 0)
            break;
        std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(br)]);
        if (bc != p)
            swap_cols(p, bc);

        bool clean = false;
        while (!clean) {
            clean = true;
            BigInt pivot = a[static_cast<size_t>(p)][static_cast<size_t>(p)];
            for (int r = p + 1; r < rows; ++r) {
                BigInt& x = a[static_cast<size_t>(r)][static_cast<size_t>(p)];
                if (x == 0)
                    continue;
                BigInt q = x / pivot;
                if (q != 0)
                    for (int c = p; c < cols; ++c)
                        a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                            q * a[static_cast<size_t>(p)][static_cast<size_t>(c)];
                if (a[static_cast<size_t>(r)][static_cast<size_t>(p)] != 0) {
                    std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(r)]);
                    clean = false;
                    break;
                }
            }
            if (!clean)
                continue;
            pivot = a[static_cast<size_t>(p)][static_cast<size_t>(p)];
            for (int c = p + 1; c < cols; ++c) {
                const BigInt& x = a[static_cast<size_t>(p)][static_cast<size_t>(c)];
                if (x == 0)
                    continue;
                BigInt q = x / pivot;
                if (q != 0)
                    add_col(c, p, -q);
                if (a[static_cast<size_t>(p)][static_cast<size_t>(c)] != 0) {
                    swap_cols(p, c);
                    clean = false;
                    break;
                }
            }
        }
        f.diag.push_back(a[static_cast<size_t>(p)][static_cast<size_t>(p)]);
        ++p;
    }
    return f;
}

struct ModSolutions {
    std::uint64_t count = 0;
    int kernel_rank = 0;
    std::vector<std::vector<long long>> basis; // generators of the solution module
};

ModSolutions solve_homogeneous(std::vector<std::vector<BigInt>> a, int cols, long long n) {
    DiagonalForm f = diagonalize(std::move(a), cols);
    ModSolutions s;
    s.count = 1;
    const int rank = static_cast<int>(f.diag.size());
    auto column = [&](int c, long long scale) {
        std::vector<long long> vec(static_cast<size_t>(cols));
        for (int r = 0; r < cols; ++r) {
            BigInt val = f.v[static_cast<size_t>(r)][static_cast<size_t>(c)] * scale;
            vec[static_cast<size_t>(r)] = static_cast<long long>(((val % n) + n) % n);
        }
        return vec;
    };
    for (int i = 0; i < rank; ++i) {
        BigInt g = boost::multiprecision::gcd(f.diag[static_cast<size_t>(i)], BigInt(n));
        long long gi = g.convert_to<long long>();
        s.count *= static_cast<std::uint64_t>(gi);
        if (gi > 1) {
            ++s.kernel_rank;
            s.basis.push_back(column(i, n / gi));
        }
    }
    for (int c = rank; c < cols; ++c) {
        s.count *= static_cast<std::uint64_t>(n);
        ++s.kernel_rank;
        s.basis.push_back(column(c, 1));
    }
    return s;
}

bool is_constant_vec(const std::vector<long long>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

} // namespace

AffineColoringCount affine_colorings(const Diagram& d, int n, long long m) {
    if (d.kind != DiagramKind::classical)
        throw WrongKind("colorings need a classical diagram");
    if (n < 2)
        throw ValidationError("modulus must be at least 2");
    long long mm = ((m % n) + n) % n;
    long long minv = mod_inverse(mm, n); // also validates the unit
    std::vector<std::vector<BigInt>> rows;
    for (const auto& c : d.crossings) {
        std::vector<BigInt> row(static_cast<size_t>(d.arcs), 0);
        long long f = c.sign > 0 ? mm : minv;
        row[static_cast<size_t>(c.under_in - 1)] += f;
        row[static_cast<size_t>(c.over - 1)] += 1 - f;
        row[static_cast<size_t>(c.under_out - 1)] -= 1;
        rows.push_back(std::move(row));
    }
    ModSolutions sols = solve_homogeneous(std::move(rows), d.arcs, n);
    AffineColoringCount out;
    out.count = sols.count;
    out.kernel_rank = sols.kernel_rank;
    for (const auto& vec : sols.basis) {
        if (!is_constant_vec(vec)) {
            Coloring col;
            for (int a = 1; a <= d.arcs; ++a)
                col[a] = static_cast<int>(vec[static_cast<size_t>(a - 1)]);
            out.sample = std::move(col);
            break;
        }
    }
    return out;
}

std::uint64_t affine_coloring_count(const LMatrix& m_of_t, int n, long long m) {
    if (n < 2)
        throw ValidationError("modulus must be at least 2");
    long long mm = ((m % n) + n) % n;
    long long minv = mod_inverse(mm, n);
    auto eval_mod = [&](const LaurentPoly& p) {
        long long acc = 0;
        for (const auto& [e, c] : p.terms()) {
            long long base = e >= 0 ? mm : minv;
            long long pw = 1;
            for (long i = 0; i < (e >= 0 ? e : -e); ++i)
                pw = pw * base % n;
            long long coeff = (c % n).convert_to<long long>();
            acc = ((acc + coeff * pw) % n + n) % n;
        }
        return acc;
    };
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(m_of_t.rows()),
                                          std::vector<BigInt>(static_cast<size_t>(m_of_t.cols())));
    for (int r = 0; r < m_of_t.rows(); ++r)
        for (int c = 0; c < m_of_t.cols(); ++c)
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = eval_mod(m_of_t.at(r, c));
    ModSolutions sols = solve_homogeneous(std::move(rows), m_of_t.cols(), n);
    return static_cast<std::uint64_t>(n) * sols.count;
}

} // namespace kq

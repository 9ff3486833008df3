#include "kq/satellite.hpp"

#include "kq/alexander.hpp"
#include "kq/errors.hpp"

#include <algorithm>

namespace kq {

namespace {

void validate_spec(const SatelliteSpec& s) {
    if (s.pattern.kind != DiagramKind::solid_torus)
        throw WrongKind("satellite pattern must be a solid-torus diagram");
    if (s.companion.kind != DiagramKind::classical)
        throw WrongKind("satellite companion must be a classical diagram");
    if (component_count(s.companion) != 1)
        throw NotAKnot("satellite companion must be a knot");
    if (s.meridian_arc && (*s.meridian_arc < 1 || *s.meridian_arc > s.companion.arcs))
        throw ValidationError("meridian arc out of range");
}

int meridian_of(const SatelliteSpec& s) { return s.meridian_arc.value_or(1); }

// Cyclic arc order of the component through start_arc. A chain whose last
// arc has no under-event closes up into its own first arc, so the walk
// first backs up to the chain head, then collects forward, then rotates.
std::vector<int> component_cycle(const Diagram& d, int start_arc) {
    std::vector<int> succ(static_cast<size_t>(d.arcs) + 1, 0);
    std::vector<int> pred(static_cast<size_t>(d.arcs) + 1, 0);
    for (const auto& c : d.crossings) {
        succ[static_cast<size_t>(c.under_in)] = c.under_out;
        pred[static_cast<size_t>(c.under_out)] = c.under_in;
    }
    int head = start_arc;
    for (int steps = 0; pred[static_cast<size_t>(head)] != 0 && steps < d.arcs; ++steps) {
        head = pred[static_cast<size_t>(head)];
        if (head == start_arc) // genuine cycle
            break;
    }
    std::vector<int> cycle;
    int cur = head;
    do {
        cycle.push_back(cur);
        cur = succ[static_cast<size_t>(cur)];
    } while (cur != 0 && cur != head && static_cast<int>(cycle.size()) <= d.arcs);
    auto pivot = std::find(cycle.begin(), cycle.end(), start_arc);
    std::rotate(cycle.begin(), pivot, cycle.end());
    return cycle;
}

} // namespace

GroupWord companion_longitude(const Diagram& d, int start_arc) {
    if (d.kind != DiagramKind::classical)
        throw WrongKind("longitude needs a classical diagram");
    if (component_count(d) != 1)
        throw NotAKnot("longitude needs a knot diagram");
    if (start_arc < 1 || start_arc > d.arcs)
        throw ValidationError("start arc out of range");
    GroupWord w;
    for (int arc : component_cycle(d, start_arc)) {
        for (const auto& c : d.crossings)
            if (c.under_in == arc) {
                w.append(Sym::y(c.over), c.sign);
                break;
            }
    }
    return w;
}

QPresentation satellite_presentation(const SatelliteSpec& s) {
    validate_spec(s);
    QPresentation pattern = present_solid_torus(s.pattern);
    GroupPresentation companion = wirtinger_group(s.companion);
    const int meridian = meridian_of(s);

    // The longitude traversal starts where the knot first passes under the
    // meridian arc, so the meridian generator is the first letter of the
    // longitude word whenever the meridian arc crosses over anywhere.
    int start = meridian;
    for (const auto& c : s.companion.crossings)
        if (c.over == meridian) {
            start = c.under_in;
            break;
        }
    GroupWord lambda = companion_longitude(s.companion, start);
    if (s.preferred_framing) {
        long long writhe = 0;
        for (const auto& c : s.companion.crossings)
            writhe += c.sign;
        lambda.append(GroupWord(Sym::y(meridian)).pow(-writhe));
    }

    GroupWord mu_u; // augmentation product along the pattern axis
    for (const auto& pass : s.pattern.axis)
        mu_u.append(Sym::x(pass.sign > 0 ? pass.under_out : pass.under_in), pass.sign);

    QPresentation out;
    out.primary_gens = pattern.primary_gens;
    out.operator_gens = pattern.operator_gens;
    for (const auto& g : companion.gens)
        out.operator_gens.push_back(g);
    out.primary_rels = pattern.primary_rels;
    out.operator_rels = pattern.operator_rels;
    for (const auto& r : companion.relators)
        out.operator_rels.push_back(r);

    GroupWord glue_mu(Sym::y(meridian));
    glue_mu.append(mu_u.inverse());
    if (!glue_mu.empty())
        out.operator_rels.push_back(std::move(glue_mu));

    GroupWord glue_lambda = lambda;
    glue_lambda.append(Sym::a(1), -1);
    out.operator_rels.push_back(std::move(glue_lambda));
    return out;
}

LMatrix satellite_alexander_matrix(const SatelliteSpec& s) {
    validate_spec(s);
    const int w = winding_number(s.pattern);
    LMatrix pattern_block = linearize(close_in_sphere(present_solid_torus(s.pattern)));
    LMatrix companion_block = linearize(present_knot(s.companion));
    for (int r = 0; r < companion_block.rows(); ++r)
        for (int c = 0; c < companion_block.cols(); ++c)
            companion_block.at(r, c) = subst_power(companion_block.at(r, c), w);
    return block_diag(pattern_block, companion_block);
}

} // namespace kq

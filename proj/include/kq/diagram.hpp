#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kq {

enum class DiagramKind { classical, solid_torus, lens };

std::string kind_name(DiagramKind k);

/// One crossing between two strands of the link. `under_in` dives below
/// `over` and emerges as `under_out`. For sign +1 the emitted quandle
/// relation is under_in * over = under_out; for sign -1 it is
/// under_out * over = under_in.
struct Crossing {
    int under_in = 0;
    int over = 0;
    int under_out = 0;
    int sign = 1;

    bool operator==(const Crossing&) const = default;
};

/// One pass of the link under the axis (surgery) curve. Fields are
/// diagrammatic: `under_in` dives below the axis and emerges as `under_out`,
/// and `sign` is the sign of that crossing. Axis order is the position in
/// the containing vector.
struct AxisPass {
    int under_in = 0;
    int under_out = 0;
    int sign = 1;

    bool operator==(const AxisPass&) const = default;
};

struct Surgery {
    long long p = 0;
    long long q = 0;

    bool operator==(const Surgery&) const = default;
};

/// A combinatorial diagram of a link in S^3 (classical), in the solid torus,
/// or in a lens space (solid torus plus surgery coefficients). Arcs are the
/// dense integers 1..arcs. Immutable after parsing.
struct Diagram {
    DiagramKind kind = DiagramKind::classical;
    int arcs = 0;
    std::vector<Crossing> crossings;
    std::vector<AxisPass> axis;
    std::optional<Surgery> surgery;

    bool operator==(const Diagram&) const = default;
};

/// Parses and validates a diagram from its JSON text form. Throws ParseError
/// for malformed JSON or unknown fields, ValidationError when the arc
/// bookkeeping is inconsistent, SurgeryError for a lens diagram with missing
/// or non-coprime (p, q).
Diagram parse_diagram(const std::string& text);

/// Canonical JSON serialization; parse_diagram(serialize_diagram(d)) == d.
std::string serialize_diagram(const Diagram& d);

/// Validates an in-memory diagram (same checks as parse_diagram).
void validate_diagram(const Diagram& d);

/// Number of link components: cycles of the arc successor map
/// under_in -> under_out, counting arcs without under-events as closed
/// loops of their own.
int component_count(const Diagram& d);

/// Signed winding number: the sum of axis pass signs. Throws WrongKind for
/// classical diagrams. Callers that need the non-negative convention take
/// the absolute value; Alexander-level results only change by a unit.
int winding_number(const Diagram& d);

} // namespace kq

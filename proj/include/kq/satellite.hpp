#pragma once

#include "kq/diagram.hpp"
#include "kq/lmatrix.hpp"
#include "kq/presentation.hpp"

#include <optional>

namespace kq {

/// Pattern knot in the solid torus plus a classical companion knot. The
/// meridian of the companion defaults to its smallest arc id.
struct SatelliteSpec {
    Diagram pattern;
    Diagram companion;
    std::optional<int> meridian_arc;
    /// Append mu^-writhe to the longitude word, turning the blackboard-framed
    /// longitude into the preferred (null-homologous) one.
    bool preferred_framing = false;
};

/// Word of the longitude read off a knot diagram: traverse the knot from
/// start_arc and record the over arc (to the power of the crossing sign) at
/// each undercrossing. This is the blackboard-framed longitude; callers
/// wanting the preferred framing append the meridian to the power of minus
/// the writhe. Throws WrongKind / NotAKnot.
GroupWord companion_longitude(const Diagram& d, int start_arc);

/// General presentation of the satellite quandle: pattern primary generators
/// and relations; operator generators a1 plus the companion arcs; operator
/// relators comprising the pattern relator, the companion Wirtinger
/// relators, and the two glueing relators mu_V mu_U^-1 and lambda_V a1^-1.
QPresentation satellite_presentation(const SatelliteSpec& s);

/// Presentation matrix of the satellite's Alexander module:
/// block_diag(V_P(t), V_C(t^w)) where V_P comes from the pattern closed in
/// the sphere, V_C from the companion, and w is the pattern winding number.
LMatrix satellite_alexander_matrix(const SatelliteSpec& s);

} // namespace kq

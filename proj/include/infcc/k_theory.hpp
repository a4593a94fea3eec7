#pragma once

#include <functional>
#include <span>

#include "infcc/laurent.hpp"
#include "infcc/polygon.hpp"
#include "infcc/triangulation.hpp"

namespace infcc {

/// theta([S_t]) = [c] - [c'] read off the flip of t; edges contribute 0.
SplitK0Class theta_simple(const Triangulation& T, const Arc& t);
/// Linear extension of theta_simple.
SplitK0Class theta(const Triangulation& T, const ModClass& e);

/// Index and coindex of an object of a polygon model (shifts act by
/// rotation). Sides of the polygon are the zero object.
SplitK0Class index(const PolygonModel& P, const Side& c);
SplitK0Class coindex(const PolygonModel& P, const Side& c);
SplitK0Class index(const PolygonModel& P, std::span<const Arc> objects);
SplitK0Class coindex(const PolygonModel& P, std::span<const Arc> objects);

/// Sigma^k c in the polygon model; sides map to sides.
Side polygon_shift(const PolygonModel& P, const Side& c, int k);

/// Canonical inclusion of classes over T/U into classes over T. Throws
/// kSupportMeetsU if the class involves an arc of U.
SplitK0Class kappa_embed(const SplitK0Class& e, const std::function<bool(const Arc&)>& in_u);

}  // namespace infcc

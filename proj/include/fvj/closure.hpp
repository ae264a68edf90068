#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

#include "fvj/census.hpp"
#include "fvj/diagram.hpp"
#include "fvj/smoothed_state.hpp"

namespace fvj {

enum class Chirality { none, slash, backslash };

std::string_view chirality_name(Chirality c);

/// Result of cancelling same-side turnbacks against the closure.
struct ReducedMatching {
  std::int64_t m1 = 0;  // surviving right/left ends (cylinder: through strands)
  std::int64_t m2 = 0;  // surviving top/bottom ends
  Chirality chirality = Chirality::none;
  std::int64_t reduction_circles = 0;

  friend bool operator==(const ReducedMatching&, const ReducedMatching&) = default;
};

/// One reducible configuration found during a scan.
struct ReductionStep {
  enum class Kind { turnback, corner_circle };
  Kind kind = Kind::turnback;
  Side side = Side::right;  // turnback only
  int first = 0;            // turnback only: the two adjacent surviving indices
  int second = 0;
};

/// Picks which of `count` available steps to apply next (returns an index
/// below `count`). The default takes the first in scan order.
using ReductionChooser = std::function<std::size_t(std::size_t count)>;

/// Repeatedly removes two adjacent ends of one side that are joined to each
/// other, gluing their closure opposites. Sides are scanned right, left (then
/// top, bottom on the torus). Throws EmbeddingViolation if the fixpoint is
/// not a family of parallel strands.
ReducedMatching reduce_cylinder(const SmoothedState& s, const ReductionChooser& choose = {});

/// Torus version. Besides same-side turnbacks, four innermost corner arcs that
/// together encircle the glued corner point are removed as one trivial circle.
/// The fixpoint must be exactly the slash or backslash pattern.
ReducedMatching reduce_torus(const SmoothedState& s, const ReductionChooser& choose = {});

ComponentCensus classify_cylinder(const SmoothedState& s, const SurfaceSpec& spec);
ComponentCensus classify_torus(const SmoothedState& s, const SurfaceSpec& spec);
/// Dispatches on spec.kind.
ComponentCensus classify(const SmoothedState& s, const SurfaceSpec& spec);

/// gcd(m1, m2) with gcd(x, 0) = x and gcd(0, 0) = 0.
std::int64_t essential_component_count(std::int64_t m1p, std::int64_t m2p);

/// Flat self-crossings of one essential component after the lattice map:
/// d - 1 on the cylinder (m2p ignored), gcd(d1*m2p, d2*m1p)/gcd(m1p, m2p) - 1
/// on the torus. Throws std::invalid_argument when there is no strand.
std::int64_t per_component_flat_crossings(std::int64_t m1p, std::int64_t m2p, const SurfaceSpec& spec);

/// Boundary matching of the crossingless slash (right-top and bottom-left
/// corner arcs) or backslash (top-left and right-bottom) pattern with m1
/// right/left ends and m2 top/bottom ends.
SmoothedState slash_matching(int m1, int m2, Chirality chirality);

/// Crossingless tangle realizing slash_matching. `surface` may be a cylinder
/// only when m2 = 0.
CutTangle build_slash_tangle(int m1, int m2, Chirality chirality,
                             SurfaceSpec surface = SurfaceSpec::torus(2, 2));

}  // namespace fvj

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fvj/census.hpp"
#include "fvj/diagram.hpp"
#include "fvj/smoothed_state.hpp"
#include "fvj/state_sum.hpp"

namespace fvj {

/// Homology class of a closed curve: p counts right-to-left passages through
/// the right/left seam, q top-to-bottom passages through the top/bottom seam.
/// On the cylinder q is always 0.
struct Homology {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool is_null() const noexcept { return p == 0 && q == 0; }
  friend bool operator==(const Homology&, const Homology&) = default;
};

enum class StepVia { interior, closure };

struct TraceStep {
  int slot = 0;  // slot the step leaves from
  StepVia via = StepVia::interior;
};

struct TracedComponent {
  std::vector<TraceStep> cycle;  // empty for circles inside the rectangle
  Homology homology;
};

/// Closed components of the state's matching glued by the closure arcs, each
/// traced from its lowest slot. Interior loops are appended as null components.
/// Throws EmbeddingViolation when the classes cannot come from disjoint simple
/// curves: |p| > 1 on the cylinder, a non-primitive torus class, or two
/// essential components in different classes.
std::vector<TracedComponent> trace_components(const SmoothedState& s, const SurfaceSpec& surface);
std::vector<TracedComponent> trace_components(const SmoothedState& s, const CutTangle& t);

/// Census computed from the traced classes: null components are trivial; n
/// essential components of class (p0, q0) each carry d - 1 (cylinder) or
/// gcd(d1*|q0|, d2*|p0|) - 1 (torus) flat self-crossings, which cancel in
/// pairs.
ComponentCensus oracle_census(const SmoothedState& s, const SurfaceSpec& surface);
ComponentCensus oracle_census(const SmoothedState& s, const CutTangle& t);

struct BlockIdentityReport {
  std::int64_t v1 = 0;  // blocks crossed before returning to the starting block
  std::int64_t v2 = 0;  // blocks between returns of the torus link to a block
  std::int64_t v3 = 0;  // left-side block crossings per component
  bool exact = false;   // every division was exact
  bool v2_lcm_form = false;  // v2 also equals the lcm-over-gcd form
  bool ok = false;      // exact && v1 == v3 && v2_lcm_form
};

/// Arguments must all be >= 1; throws std::invalid_argument otherwise.
BlockIdentityReport block_identities(std::int64_t d1, std::int64_t d2, std::int64_t m1, std::int64_t m2);

struct OracleMismatch {
  std::uint64_t state_index = 0;
  std::string state;
  std::int64_t exponent = 0;
  ComponentCensus classified;
  ComponentCensus oracle;
  std::string error;  // non-empty when either path threw
  SmoothedState smoothed;
};

struct OracleReport {
  std::uint64_t states_checked = 0;
  std::vector<OracleMismatch> mismatches;  // ordered by state index

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Runs `classifier` (default: closure classification) and oracle_census on
/// every state and records each disagreement. OpenMP over states.
OracleReport oracle_check(const CutTangle& t, const StateSumOptions& options = {});

}  // namespace fvj

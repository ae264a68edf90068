#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fvj/errors.hpp"

namespace fvj {

enum class SurfaceKind { cylinder, torus };

/// Cylinder with rotation order d, or torus with lattice Z_d1 + Z_d2.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::cylinder;
  int d = 2;
  int d1 = 2;
  int d2 = 2;

  static SurfaceSpec cylinder(int d) { return {SurfaceKind::cylinder, d, 0, 0}; }
  static SurfaceSpec torus(int d1, int d2) { return {SurfaceKind::torus, 0, d1, d2}; }
  bool is_torus() const noexcept { return kind == SurfaceKind::torus; }

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

using ArcLabel = std::int64_t;

/// Direction of a boundary end: `out` means the strand leaves the rectangle there.
enum class EndDirection { in, out };

struct BoundaryEnd {
  ArcLabel arc = 0;
  EndDirection dir = EndDirection::in;

  friend bool operator==(const BoundaryEnd&, const BoundaryEnd&) = default;
};

/// Classical crossing. Slots run counterclockwise from the incoming under-arc,
/// so the under strand passes slots[0] -> slots[2]. `over_in` (1 or 3) names the
/// slot where the over strand enters.
struct CrossingRecord {
  int id = 0;
  std::array<ArcLabel, 4> slots{};
  int over_in = 3;

  friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

/// Classical tangle in the fundamental rectangle of a cylinder or torus.
///
/// right/left are listed top to bottom, top/bottom left to right. The torus
/// closure glues right[i] to left[i] and top[j] to bottom[j]; the cylinder only
/// the former.
struct CutTangle {
  SurfaceSpec surface;
  std::vector<CrossingRecord> crossings;
  std::vector<BoundaryEnd> right;
  std::vector<BoundaryEnd> left;
  std::vector<BoundaryEnd> top;
  std::vector<BoundaryEnd> bottom;
  std::int64_t free_loops = 0;

  int m1() const noexcept { return static_cast<int>(right.size()); }
  int m2() const noexcept { return static_cast<int>(top.size()); }

  friend bool operator==(const CutTangle&, const CutTangle&) = default;
};

enum class ViolationCode {
  surface_parameter,   // E_SURFACE
  arc_multiplicity,    // E_ARC_MULT
  arc_orientation,     // E_ORIENT
  closure_orientation, // E_CLOSURE_ORIENT
  side_count,          // E_SIDE_COUNT
  crossing_form,       // E_CROSSING
  negative_loops,      // E_LOOPS
};

struct Violation {
  ViolationCode code;
  ArcLabel arc = 0;   // arc codes
  std::string where;  // side / parameter / crossing designation
  std::int64_t value = 0;

  /// Machine-readable single line, e.g. "E_ORIENT arc=3".
  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view code_name(ViolationCode code);

class InvalidTangle : public Error {
public:
  explicit InvalidTangle(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// Every violated invariant, in a deterministic order. Empty iff valid.
std::vector<Violation> validate(const CutTangle& t);

/// Grammar-only parse; invariants are not checked. Throws ParseError.
CutTangle parse_tangle_syntax(std::string_view text);

/// parse_tangle_syntax followed by validate. Throws ParseError on syntax
/// errors and InvalidTangle when any invariant fails.
CutTangle parse_tangle(std::string_view text);

/// Canonical text form; parse_tangle(serialize(t)) == t for valid t whose
/// crossing ids are 1..n in order.
std::string serialize(const CutTangle& t);

int crossing_sign(const CrossingRecord& c);
std::int64_t writhe(const CutTangle& t);

/// Same crossing with over and under exchanged, re-anchored at the new
/// incoming under-arc.
CrossingRecord mirror(const CrossingRecord& c);
CutTangle mirror(const CutTangle& t);

}  // namespace fvj

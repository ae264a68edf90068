#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fvj {

enum class Side { right, top, left, bottom };

/// Global numbering of boundary slots, 0-based: right 0..m1-1, top m1..m1+m2-1,
/// left m1+m2..2m1+m2-1, bottom 2m1+m2..2(m1+m2)-1. A cylinder has m2 = 0.
struct BoundaryLayout {
  int m1 = 0;
  int m2 = 0;

  int size() const noexcept { return 2 * (m1 + m2); }

  int slot(Side side, int index) const noexcept {
    switch (side) {
      case Side::right: return index;
      case Side::top: return m1 + index;
      case Side::left: return m1 + m2 + index;
      case Side::bottom: return 2 * m1 + m2 + index;
    }
    return -1;
  }

  Side side_of(int slot) const noexcept {
    if (slot < m1) return Side::right;
    if (slot < m1 + m2) return Side::top;
    if (slot < 2 * m1 + m2) return Side::left;
    return Side::bottom;
  }

  int index_of(int slot) const noexcept {
    switch (side_of(slot)) {
      case Side::right: return slot;
      case Side::top: return slot - m1;
      case Side::left: return slot - m1 - m2;
      case Side::bottom: return slot - 2 * m1 - m2;
    }
    return -1;
  }

  /// The slot glued to `slot` by the closure.
  int opposite(int slot) const noexcept {
    const int half = m1 + m2;
    return slot < half ? slot + half : slot - half;
  }

  friend bool operator==(const BoundaryLayout&, const BoundaryLayout&) = default;
};

inline Side opposite_side(Side s) noexcept {
  switch (s) {
    case Side::right: return Side::left;
    case Side::left: return Side::right;
    case Side::top: return Side::bottom;
    case Side::bottom: return Side::top;
  }
  return s;
}

/// One full smoothing of a tangle: the crossingless matching it induces on the
/// boundary slots plus the closed circles left inside the rectangle.
struct SmoothedState {
  BoundaryLayout layout;
  std::vector<int> partner;  // involution without fixed points on layout slots
  std::int64_t interior_loops = 0;

  friend bool operator==(const SmoothedState&, const SmoothedState&) = default;
};

/// Builds a state from explicit slot pairs. Throws std::invalid_argument if the
/// pairs are not a perfect matching of the layout.
SmoothedState make_smoothed_state(BoundaryLayout layout, const std::vector<std::pair<int, int>>& pairs,
                                  std::int64_t interior_loops = 0);

}  // namespace fvj

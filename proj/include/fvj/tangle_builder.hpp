#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fvj/diagram.hpp"
#include "fvj/smoothed_state.hpp"

namespace fvj {

/// Unoriented tangle under construction.
///
/// Edges are abstract strand segments; each must end up with exactly two
/// incidences among crossing slots and boundary ends. orient() walks the closed
/// components (closure arcs included), orients each, and emits a CutTangle in
/// the anchored slot encoding with labels edge + 1.
class TangleSketch {
public:
  TangleSketch(SurfaceSpec surface, int m1, int m2);

  int add_edge();
  /// Edges listed counterclockwise; (0,2) and (1,3) are the two strands.
  /// `over_is_02` selects which strand passes over.
  int add_crossing(const std::array<int, 4>& edges_ccw, bool over_is_02);
  void attach_boundary(Side side, int index, int edge);
  void add_free_loop() { ++free_loops_; }

  /// Number of closed components of the closure that carry at least one edge.
  int component_count() const;

  /// `reverse[k]` flips the traversal direction of component k (components
  /// are numbered in order of their lowest edge id). Missing entries mean false.
  /// Throws std::logic_error when an edge does not have exactly two incidences.
  CutTangle orient(std::span<const bool> reverse = {}) const;

private:
  struct Crossing {
    std::array<int, 4> edges;
    bool over_is_02;
  };

  int boundary_port(Side side, int index) const;
  int next_port(int port) const;
  std::vector<int> component_of_edges(std::vector<std::array<int, 2>>* directed) const;

  SurfaceSpec surface_;
  int m1_;
  int m2_;
  int edge_count_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<int> boundary_edge_;  // by boundary port offset, -1 when unset
  std::int64_t free_loops_ = 0;
};

}  // namespace fvj

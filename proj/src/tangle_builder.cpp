#include "fvj/tangle_builder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace fvj {

// Port numbering: crossing c slot k -> 4c + k; boundary ends follow, in the
// global order right, top, left, bottom.

TangleSketch::TangleSketch(SurfaceSpec surface, int m1, int m2)
    : surface_(surface), m1_(m1), m2_(surface.is_torus() ? m2 : 0) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("negative side count");
  boundary_edge_.assign(static_cast<std::size_t>(2 * (m1_ + m2_)), -1);
}

int TangleSketch::add_edge() { return edge_count_++; }

int TangleSketch::add_crossing(const std::array<int, 4>& edges_ccw, bool over_is_02) {
  for (int e : edges_ccw)
    if (e < 0 || e >= edge_count_) throw std::invalid_argument("unknown edge in crossing");
  crossings_.push_back({edges_ccw, over_is_02});
  return static_cast<int>(crossings_.size()) - 1;
}

int TangleSketch::boundary_port(Side side, int index) const {
  int offset = 0;
  switch (side) {
    case Side::right: offset = index; break;
    case Side::top: offset = m1_ + index; break;
    case Side::left: offset = m1_ + m2_ + index; break;
    case Side::bottom: offset = 2 * m1_ + m2_ + index; break;
  }
  return static_cast<int>(4 * crossings_.size()) + offset;
}

void TangleSketch::attach_boundary(Side side, int index, int edge) {
  const int count = (side == Side::right || side == Side::left) ? m1_ : m2_;
  if (index < 0 || index >= count) throw std::out_of_range("boundary index out of range");
  if (edge < 0 || edge >= edge_count_) throw std::invalid_argument("unknown edge on boundary");
  const int port = boundary_port(side, index) - static_cast<int>(4 * crossings_.size());
  boundary_edge_[static_cast<std::size_t>(port)] = edge;
}

int TangleSketch::next_port(int port) const {
  const int crossing_ports = static_cast<int>(4 * crossings_.size());
  if (port < crossing_ports) return (port / 4) * 4 + (port % 4 + 2) % 4;
  const int offset = port - crossing_ports;
  const int half = m1_ + m2_;
  return crossing_ports + (offset < half ? offset + half : offset - half);
}

std::vector<int> TangleSketch::component_of_edges(std::vector<std::array<int, 2>>* directed) const {
  const int crossing_ports = static_cast<int>(4 * crossings_.size());
  const int total_ports = crossing_ports + static_cast<int>(boundary_edge_.size());
  std::vector<int> port_edge(static_cast<std::size_t>(total_ports), -1);
  std::vector<std::vector<int>> edge_ports(static_cast<std::size_t>(edge_count_));
  for (std::size_t c = 0; c < crossings_.size(); ++c)
    for (int k = 0; k < 4; ++k) {
      const int port = static_cast<int>(4 * c) + k;
      const int e = crossings_[c].edges[static_cast<std::size_t>(k)];
      port_edge[static_cast<std::size_t>(port)] = e;
      edge_ports[static_cast<std::size_t>(e)].push_back(port);
    }
  for (std::size_t b = 0; b < boundary_edge_.size(); ++b) {
    const int e = boundary_edge_[b];
    if (e < 0) throw std::logic_error("boundary end " + std::to_string(b) + " has no edge");
    const int port = crossing_ports + static_cast<int>(b);
    port_edge[static_cast<std::size_t>(port)] = e;
    edge_ports[static_cast<std::size_t>(e)].push_back(port);
  }
  for (int e = 0; e < edge_count_; ++e)
    if (edge_ports[static_cast<std::size_t>(e)].size() != 2)
      throw std::logic_error("edge " + std::to_string(e) + " does not have exactly two ends");

  std::vector<int> component(static_cast<std::size_t>(edge_count_), -1);
  if (directed) directed->assign(static_cast<std::size_t>(edge_count_), {-1, -1});
  int next_component = 0;
  for (int start = 0; start < edge_count_; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    int e = start;
    int tail = edge_ports[static_cast<std::size_t>(start)][0];
    while (component[static_cast<std::size_t>(e)] < 0) {
      const auto& ports = edge_ports[static_cast<std::size_t>(e)];
      const int head = ports[0] == tail ? ports[1] : ports[0];
      component[static_cast<std::size_t>(e)] = next_component;
      if (directed) (*directed)[static_cast<std::size_t>(e)] = {tail, head};
      tail = next_port(head);
      e = port_edge[static_cast<std::size_t>(tail)];
    }
    ++next_component;
  }
  return component;
}

int TangleSketch::component_count() const {
  int n = 0;
  for (int c : component_of_edges(nullptr)) n = std::max(n, c + 1);
  return n;
}

CutTangle TangleSketch::orient(std::span<const bool> reverse) const {
  std::vector<std::array<int, 2>> directed;
  const auto component = component_of_edges(&directed);
  for (int e = 0; e < edge_count_; ++e) {
    const auto k = static_cast<std::size_t>(component[static_cast<std::size_t>(e)]);
    if (k < reverse.size() && reverse[k]) std::swap(directed[static_cast<std::size_t>(e)][0], directed[static_cast<std::size_t>(e)][1]);
  }
  auto is_head = [&](int e, int port) { return directed[static_cast<std::size_t>(e)][1] == port; };

  CutTangle t;
  t.surface = surface_;
  t.free_loops = free_loops_;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    const int port0 = static_cast<int>(4 * c);
    // Under strand is the pair not marked over; anchor at its incoming slot.
    const int under_a = x.over_is_02 ? 1 : 0;
    const int anchor = is_head(x.edges[static_cast<std::size_t>(under_a)], port0 + under_a) ? under_a : under_a + 2;
    const int over_a = 1 - under_a;
    const int over_incoming = is_head(x.edges[static_cast<std::size_t>(over_a)], port0 + over_a) ? over_a : over_a + 2;
    CrossingRecord rec;
    rec.id = static_cast<int>(c) + 1;
    for (int k = 0; k < 4; ++k)
      rec.slots[static_cast<std::size_t>(k)] = x.edges[static_cast<std::size_t>((anchor + k) % 4)] + 1;
    rec.over_in = (over_incoming - anchor + 4) % 4;
    t.crossings.push_back(rec);
  }
  const int crossing_ports = static_cast<int>(4 * crossings_.size());
  auto emit = [&](std::vector<BoundaryEnd>& side, Side which, int count) {
    for (int i = 0; i < count; ++i) {
      const int port = boundary_port(which, i);
      const int e = boundary_edge_[static_cast<std::size_t>(port - crossing_ports)];
      side.push_back({e + 1, is_head(e, port) ? EndDirection::out : EndDirection::in});
    }
  };
  emit(t.right, Side::right, m1_);
  emit(t.left, Side::left, m1_);
  emit(t.top, Side::top, m2_);
  emit(t.bottom, Side::bottom, m2_);
  return t;
}

}  // namespace fvj

#include "fvj/closure.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvj/tangle_builder.hpp"

namespace fvj {

std::string_view chirality_name(Chirality c) {
  switch (c) {
    case Chirality::none: return "none";
    case Chirality::slash: return "slash";
    case Chirality::backslash: return "backslash";
  }
  return "none";
}

std::int64_t essential_component_count(std::int64_t m1p, std::int64_t m2p) {
  if (m1p < 0 || m2p < 0) throw std::invalid_argument("negative strand count");
  return std::gcd(m1p, m2p);
}

std::int64_t per_component_flat_crossings(std::int64_t m1p, std::int64_t m2p, const SurfaceSpec& spec) {
  if (!spec.is_torus()) {
    if (m1p < 1) throw std::invalid_argument("cylinder crossing count needs a through strand");
    return spec.d - 1;
  }
  const auto n = essential_component_count(m1p, m2p);
  if (n == 0) throw std::invalid_argument("torus crossing count undefined for (0, 0)");
  return std::gcd(spec.d1 * m2p, spec.d2 * m1p) / n - 1;
}

SmoothedState slash_matching(int m1, int m2, Chirality chirality) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("negative side count");
  const BoundaryLayout L{m1, m2};
  SmoothedState s{L, std::vector<int>(static_cast<std::size_t>(L.size()), -1), 0};
  const bool mirror = chirality == Chirality::backslash && m1 > 0 && m2 > 0;
  // Written for the slash; the backslash is its left-right reflection.
  auto at = [&](Side side, int i) {
    if (mirror) {
      if (side == Side::right) side = Side::left;
      else if (side == Side::left) side = Side::right;
      else i = m2 - 1 - i;
    }
    return L.slot(side, i);
  };
  auto join = [&](int a, int b) {
    s.partner[static_cast<std::size_t>(a)] = b;
    s.partner[static_cast<std::size_t>(b)] = a;
  };
  if (m1 >= m2) {
    for (int k = 0; k < m2; ++k) join(at(Side::right, k), at(Side::top, m2 - 1 - k));
    for (int k = 0; k < m1 - m2; ++k) join(at(Side::right, m2 + k), at(Side::left, k));
    for (int k = 0; k < m2; ++k) join(at(Side::left, m1 - m2 + k), at(Side::bottom, m2 - 1 - k));
  } else {
    for (int k = 0; k < m1; ++k) join(at(Side::right, k), at(Side::top, m2 - 1 - k));
    for (int k = 0; k < m2 - m1; ++k) join(at(Side::top, k), at(Side::bottom, m1 + k));
    for (int k = 0; k < m1; ++k) join(at(Side::left, k), at(Side::bottom, m1 - 1 - k));
  }
  return s;
}

CutTangle build_slash_tangle(int m1, int m2, Chirality chirality, SurfaceSpec surface) {
  if (m1 < 0 || m2 < 0 || (m1 == 0 && m2 == 0)) throw std::invalid_argument("slash tangle needs m1, m2 >= 0, not both 0");
  if (!surface.is_torus() && m2 != 0) throw std::invalid_argument("cylinder tangles have no top/bottom ends");
  const auto s = slash_matching(m1, m2, chirality);
  TangleSketch sketch(surface, m1, m2);
  for (int a = 0; a < s.layout.size(); ++a) {
    const int b = s.partner[static_cast<std::size_t>(a)];
    if (b < a) continue;
    const int e = sketch.add_edge();
    sketch.attach_boundary(s.layout.side_of(a), s.layout.index_of(a), e);
    sketch.attach_boundary(s.layout.side_of(b), s.layout.index_of(b), e);
  }
  return sketch.orient();
}

namespace {

class Reducer {
public:
  Reducer(const SmoothedState& s, bool torus) : layout_(s.layout), partner_(s.partner), torus_(torus) {
    if (static_cast<int>(partner_.size()) != layout_.size()) throw std::invalid_argument("matching size does not fit layout");
    if (!torus_ && layout_.m2 != 0) throw std::invalid_argument("cylinder state with top/bottom slots");
    horizontal_.resize(static_cast<std::size_t>(layout_.m1));
    vertical_.resize(static_cast<std::size_t>(layout_.m2));
    std::iota(horizontal_.begin(), horizontal_.end(), 0);
    std::iota(vertical_.begin(), vertical_.end(), 0);
  }

  ReducedMatching run(const ReductionChooser& choose) {
    std::vector<ReductionStep> steps;
    for (;;) {
      collect(steps);
      if (steps.empty()) break;
      const std::size_t pick = choose ? choose(steps.size()) : 0;
      if (pick >= steps.size()) throw std::out_of_range("reduction chooser returned an invalid index");
      apply(steps[pick]);
    }
    return finish();
  }

private:
  const std::vector<int>& alive(Side side) const {
    return (side == Side::right || side == Side::left) ? horizontal_ : vertical_;
  }
  int slot(Side side, int index) const { return layout_.slot(side, index); }
  int partner(int slot) const { return partner_[static_cast<std::size_t>(slot)]; }
  void join(int a, int b) {
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
  }

  void collect(std::vector<ReductionStep>& steps) const {
    steps.clear();
    static constexpr Side kOrder[] = {Side::right, Side::left, Side::top, Side::bottom};
    for (Side side : kOrder) {
      if (!torus_ && (side == Side::top || side == Side::bottom)) continue;
      const auto& idx = alive(side);
      for (std::size_t k = 0; k + 1 < idx.size(); ++k)
        if (partner(slot(side, idx[k])) == slot(side, idx[k + 1]))
          steps.push_back({ReductionStep::Kind::turnback, side, idx[k], idx[k + 1]});
    }
    if (torus_ && horizontal_.size() >= 2 && vertical_.size() >= 2) {
      const int r0 = horizontal_.front(), r1 = horizontal_.back();
      const int c0 = vertical_.front(), c1 = vertical_.back();
      const bool corner = partner(slot(Side::right, r0)) == slot(Side::top, c1) &&
                          partner(slot(Side::left, r0)) == slot(Side::top, c0) &&
                          partner(slot(Side::left, r1)) == slot(Side::bottom, c0) &&
                          partner(slot(Side::right, r1)) == slot(Side::bottom, c1);
      if (corner) steps.push_back({ReductionStep::Kind::corner_circle, Side::right, 0, 0});
    }
  }

  static void erase_index(std::vector<int>& v, int index) { std::erase(v, index); }

  void apply(const ReductionStep& step) {
    if (step.kind == ReductionStep::Kind::corner_circle) {
      ++circles_;
      horizontal_.erase(horizontal_.begin());
      horizontal_.pop_back();
      vertical_.erase(vertical_.begin());
      vertical_.pop_back();
      return;
    }
    const Side opp = opposite_side(step.side);
    const int oa = slot(opp, step.first);
    const int ob = slot(opp, step.second);
    if (partner(oa) == ob) {
      ++circles_;
    } else {
      join(partner(oa), partner(ob));
    }
    auto& idx = (step.side == Side::right || step.side == Side::left) ? horizontal_ : vertical_;
    erase_index(idx, step.first);
    erase_index(idx, step.second);
  }

  ReducedMatching finish() const {
    const int M1 = static_cast<int>(horizontal_.size());
    const int M2 = static_cast<int>(vertical_.size());
    // Compress survivors to a layout of their own and compare with the patterns.
    const BoundaryLayout small{M1, M2};
    std::vector<int> to_small(static_cast<std::size_t>(layout_.size()), -1);
    for (int k = 0; k < M1; ++k) {
      to_small[static_cast<std::size_t>(slot(Side::right, horizontal_[static_cast<std::size_t>(k)]))] = small.slot(Side::right, k);
      to_small[static_cast<std::size_t>(slot(Side::left, horizontal_[static_cast<std::size_t>(k)]))] = small.slot(Side::left, k);
    }
    for (int k = 0; k < M2; ++k) {
      to_small[static_cast<std::size_t>(slot(Side::top, vertical_[static_cast<std::size_t>(k)]))] = small.slot(Side::top, k);
      to_small[static_cast<std::size_t>(slot(Side::bottom, vertical_[static_cast<std::size_t>(k)]))] = small.slot(Side::bottom, k);
    }
    std::vector<int> survivors(static_cast<std::size_t>(small.size()), -1);
    for (int a = 0; a < layout_.size(); ++a) {
      const int sa = to_small[static_cast<std::size_t>(a)];
      if (sa < 0) continue;
      const int sb = to_small[static_cast<std::size_t>(partner(a))];
      if (sb < 0) throw EmbeddingViolation("surviving end matched to a removed end");
      survivors[static_cast<std::size_t>(sa)] = sb;
    }

    ReducedMatching out{M1, M2, Chirality::none, circles_};
    if (survivors == slash_matching(M1, M2, Chirality::slash).partner) {
      if (M1 > 0 && M2 > 0) out.chirality = Chirality::slash;
      return out;
    }
    if (survivors == slash_matching(M1, M2, Chirality::backslash).partner) {
      out.chirality = Chirality::backslash;
      return out;
    }
    throw EmbeddingViolation(torus_ ? "reduced matching is neither a slash nor a backslash pattern"
                                    : "surviving through strands are not parallel");
  }

  BoundaryLayout layout_;
  std::vector<int> partner_;
  bool torus_;
  std::vector<int> horizontal_;  // alive right/left indices, ascending
  std::vector<int> vertical_;    // alive top/bottom indices, ascending
  std::int64_t circles_ = 0;
};

}  // namespace

ReducedMatching reduce_cylinder(const SmoothedState& s, const ReductionChooser& choose) {
  return Reducer(s, false).run(choose);
}

ReducedMatching reduce_torus(const SmoothedState& s, const ReductionChooser& choose) {
  return Reducer(s, true).run(choose);
}

ComponentCensus classify_cylinder(const SmoothedState& s, const SurfaceSpec& spec) {
  if (spec.is_torus()) throw std::invalid_argument("classify_cylinder needs a cylinder surface");
  const auto r = reduce_cylinder(s);
  const std::int64_t base = s.interior_loops + r.reduction_circles;
  if (r.m1 == 0) return {base, 0};
  if (spec.d % 2 == 0) return {base, r.m1};
  return {base + r.m1, 0};
}

ComponentCensus classify_torus(const SmoothedState& s, const SurfaceSpec& spec) {
  if (!spec.is_torus()) throw std::invalid_argument("classify_torus needs a torus surface");
  const auto r = reduce_torus(s);
  const std::int64_t base = s.interior_loops + r.reduction_circles;
  const auto n = essential_component_count(r.m1, r.m2);
  if (n == 0) return {base, 0};
  // Even flat self-crossing count cancels down to a plain circle.
  if (per_component_flat_crossings(r.m1, r.m2, spec) % 2 == 0) return {base + n, 0};
  return {base, n};
}

ComponentCensus classify(const SmoothedState& s, const SurfaceSpec& spec) {
  return spec.is_torus() ? classify_torus(s, spec) : classify_cylinder(s, spec);
}

}  // namespace fvj

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fvj/census.hpp"
#include "fvj/diagram.hpp"
#include "fvj/flat_value.hpp"
#include "fvj/smoothed_state.hpp"

namespace fvj {

enum class Smoothing : std::uint8_t { A = 0, B = 1 };
using State = std::vector<Smoothing>;

inline constexpr int kDefaultStateCap = 24;

/// All 2^n states in binary counting order: crossing ids ascending from the
/// most significant position, A = 0. Throws ResourceError when n > cap.
std::vector<State> enumerate_states(int n, int cap = kDefaultStateCap);

/// State number `index` of an n-crossing diagram in enumerate_states order.
State state_from_index(std::uint64_t index, int n);
std::uint64_t state_index(const State& s);
/// '0' for A, '1' for B, crossing order left to right.
std::string state_string(const State& s);

/// A tangle compiled for repeated smoothing. Holds scratch space, so one
/// instance per thread.
class StateResolver {
public:
  explicit StateResolver(const CutTangle& t);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  const BoundaryLayout& layout() const noexcept { return layout_; }

  /// A-smoothing joins p0-p1 and p2-p3, B-smoothing p0-p3 and p1-p2.
  void resolve(std::uint64_t state_index, SmoothedState& out);
  SmoothedState resolve(const State& s);

private:
  int find(int x);

  BoundaryLayout layout_;
  std::vector<std::array<int, 4>> crossings_;  // arc indices, sorted by crossing id
  std::vector<int> boundary_arc_;               // by global slot
  int arc_count_ = 0;
  std::int64_t free_loops_ = 0;
  std::vector<int> parent_;
  std::vector<int> first_slot_of_root_;
};

SmoothedState resolve_state(const CutTangle& t, const State& s);

/// Census of one smoothed state on the tangle's surface.
using Classifier = std::function<ComponentCensus(const SmoothedState&, const SurfaceSpec&)>;

struct StateSumOptions {
  int max_crossings = kDefaultStateCap;
  int jobs = 0;                 // OpenMP threads; 0 leaves the runtime default
  bool record_states = false;   // keep one StateRecord per state
  Classifier classifier;        // empty: closure classification
};

struct StateRecord {
  std::uint64_t index = 0;
  std::int64_t exponent = 0;  // alpha(s) - beta(s)
  ComponentCensus census;
};

struct StateSumResult {
  FlatValue bracket;
  std::vector<StateRecord> states;  // ordered by index when recorded
};

/// Flat-virtual bracket: sum over states of a^(alpha-beta) times the
/// normalized census. OpenMP over states; a classification failure is
/// rethrown as EmbeddingViolation naming the lowest failing state.
StateSumResult evaluate_states(const CutTangle& t, const StateSumOptions& options = {});
/// Single-threaded reference for evaluate_states.
StateSumResult evaluate_states_serial(const CutTangle& t, const StateSumOptions& options = {});

FlatValue flat_bracket(const CutTangle& t, const StateSumOptions& options = {});
FlatValue flat_bracket_serial(const CutTangle& t, const StateSumOptions& options = {});
/// writhe_prefactor(writhe(t)) * flat_bracket(t).
FlatValue flat_jones(const CutTangle& t, const StateSumOptions& options = {});

/// a^exponent times the normalized census.
FlatValue state_contribution(std::int64_t exponent, const ComponentCensus& census);

}  // namespace fvj

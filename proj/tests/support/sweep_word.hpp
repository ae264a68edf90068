#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fvj/diagram.hpp"
#include "fvj/tangle_builder.hpp"

namespace fvj::testing {

// A tangle drawn by sweeping a vertical line across the rectangle from the
// left side to the right side. Strand positions are numbered from the top.
// The left side feeds the initial m1 strands, the right side takes the final
// m1; top ends attach at position 0 and bottom ends at the last position, in
// sweep order.
struct Event {
  enum class Kind { cross, cap, cup, top_in, top_out, bottom_in, bottom_out };
  Kind kind = Kind::cross;
  int pos = 0;              // cross: strands pos, pos+1; cap/cup: the new/closed pair
  bool upper_over = false;  // cross only
};

struct SweepWord {
  SurfaceSpec surface = SurfaceSpec::cylinder(2);
  int m1 = 0;
  int m2 = 0;
  std::vector<Event> events;
};

Event cross(int pos, bool upper_over);
Event cap(int pos);
Event cup(int pos);

/// Strand count just before events[index] (index == size gives the final count).
int strands_before(const SweepWord& w, std::size_t index);
int crossing_count(const SweepWord& w);

/// Throws std::logic_error when the word is not well formed.
TangleSketch sketch(const SweepWord& w);
CutTangle realize(const SweepWord& w, std::span<const bool> reverse = {});
CutTangle realize_random_orientation(const SweepWord& w, std::mt19937_64& rng);

struct WordShape {
  SurfaceSpec surface = SurfaceSpec::cylinder(2);
  int m1 = 0;
  int m2 = 0;
  int crossings = 0;
  int max_strands = 6;
};

SweepWord random_word(const WordShape& shape, std::mt19937_64& rng);

// Local moves, inserted before events[at] on the strand(s) starting at `pos`.
SweepWord insert_kink(const SweepWord& w, std::size_t at, int pos, bool cap_below, bool upper_over);
SweepWord insert_r2(const SweepWord& w, std::size_t at, int pos, bool upper_over);

/// The two sides of a third move on strands pos..pos+2 with the given
/// heights (higher passes over).
struct R3Pair {
  SweepWord left;   // s_i s_{i+1} s_i
  SweepWord right;  // s_{i+1} s_i s_{i+1}
};
R3Pair insert_r3(const SweepWord& w, std::size_t at, int pos, const std::array<int, 3>& heights);

/// Distinct flat_jones values over every orientation of the closure's
/// components, as sorted text. Invariant under moves even though component
/// numbering may change and a free loop may pick up crossings.
std::vector<std::string> jones_over_orientations(const SweepWord& w);

}  // namespace fvj::testing

#pragma once

#include <cstdint>

namespace fvj {

/// Semi-trivial class of a closed smoothed diagram: t trivial circles
/// disjoint from e flat eights.
struct ComponentCensus {
  std::int64_t trivial = 0;
  std::int64_t eights = 0;

  friend bool operator==(const ComponentCensus&, const ComponentCensus&) = default;
};

}  // namespace fvj

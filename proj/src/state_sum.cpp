#include "fvj/state_sum.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <omp.h>

#include "fvj/closure.hpp"
#include "fvj/errors.hpp"

namespace fvj {

SmoothedState make_smoothed_state(BoundaryLayout layout, const std::vector<std::pair<int, int>>& pairs,
                                  std::int64_t interior_loops) {
  SmoothedState s{layout, std::vector<int>(static_cast<std::size_t>(layout.size()), -1), interior_loops};
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= layout.size() || b >= layout.size() || a == b)
      throw std::invalid_argument("slot pair out of range");
    if (s.partner[static_cast<std::size_t>(a)] >= 0 || s.partner[static_cast<std::size_t>(b)] >= 0)
      throw std::invalid_argument("slot matched twice");
    s.partner[static_cast<std::size_t>(a)] = b;
    s.partner[static_cast<std::size_t>(b)] = a;
  }
  if (std::find(s.partner.begin(), s.partner.end(), -1) != s.partner.end())
    throw std::invalid_argument("matching is not perfect");
  return s;
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative crossing count");
  if (n > cap || n > 62)
    throw ResourceError("state enumeration over " + std::to_string(n) + " crossings exceeds the cap of " +
                        std::to_string(std::min(cap, 62)));
}

}  // namespace

State state_from_index(std::uint64_t index, int n) {
  State s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    s[static_cast<std::size_t>(j)] = ((index >> (n - 1 - j)) & 1U) ? Smoothing::B : Smoothing::A;
  return s;
}

std::uint64_t state_index(const State& s) {
  std::uint64_t index = 0;
  for (auto c : s) index = (index << 1U) | (c == Smoothing::B ? 1U : 0U);
  return index;
}

std::string state_string(const State& s) {
  std::string out;
  out.reserve(s.size());
  for (auto c : s) out += c == Smoothing::B ? '1' : '0';
  return out;
}

std::vector<State> enumerate_states(int n, int cap) {
  check_cap(n, cap);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<State> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(state_from_index(i, n));
  return out;
}

// ---------------------------------------------------------------------------

StateResolver::StateResolver(const CutTangle& t) : layout_{t.m1(), t.surface.is_torus() ? t.m2() : 0} {
  if (auto v = validate(t); !v.empty()) throw InvalidTangle(std::move(v));
  std::map<ArcLabel, int> index;
  auto arc = [&](ArcLabel label) {
    auto [it, inserted] = index.try_emplace(label, arc_count_);
    if (inserted) ++arc_count_;
    return it->second;
  };
  std::vector<CrossingRecord> sorted = t.crossings;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& c : sorted)
    crossings_.push_back({arc(c.slots[0]), arc(c.slots[1]), arc(c.slots[2]), arc(c.slots[3])});
  boundary_arc_.resize(static_cast<std::size_t>(layout_.size()));
  auto place = [&](const std::vector<BoundaryEnd>& side, Side which) {
    for (std::size_t i = 0; i < side.size(); ++i)
      boundary_arc_[static_cast<std::size_t>(layout_.slot(which, static_cast<int>(i)))] = arc(side[i].arc);
  };
  place(t.right, Side::right);
  place(t.left, Side::left);
  if (t.surface.is_torus()) {
    place(t.top, Side::top);
    place(t.bottom, Side::bottom);
  }
  free_loops_ = t.free_loops;
  parent_.resize(static_cast<std::size_t>(arc_count_));
  first_slot_of_root_.resize(static_cast<std::size_t>(arc_count_));
}

int StateResolver::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

void StateResolver::resolve(std::uint64_t state_index, SmoothedState& out) {
  std::iota(parent_.begin(), parent_.end(), 0);
  int unions = 0;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[static_cast<std::size_t>(a)] = b;
    ++unions;
  };
  const int n = crossing_count();
  for (int j = 0; j < n; ++j) {
    const auto& c = crossings_[static_cast<std::size_t>(j)];
    if ((state_index >> (n - 1 - j)) & 1U) {
      unite(c[0], c[3]);
      unite(c[1], c[2]);
    } else {
      unite(c[0], c[1]);
      unite(c[2], c[3]);
    }
  }
  out.layout = layout_;
  out.partner.resize(static_cast<std::size_t>(layout_.size()));
  std::fill(first_slot_of_root_.begin(), first_slot_of_root_.end(), -1);
  for (int slot = 0; slot < layout_.size(); ++slot) {
    const int root = find(boundary_arc_[static_cast<std::size_t>(slot)]);
    int& first = first_slot_of_root_[static_cast<std::size_t>(root)];
    if (first < 0) {
      first = slot;
    } else {
      out.partner[static_cast<std::size_t>(slot)] = first;
      out.partner[static_cast<std::size_t>(first)] = slot;
    }
  }
  const int components = arc_count_ - unions;
  out.interior_loops = components - layout_.size() / 2 + free_loops_;
}

SmoothedState StateResolver::resolve(const State& s) {
  if (static_cast<int>(s.size()) != crossing_count()) throw std::invalid_argument("state length differs from crossing count");
  SmoothedState out;
  resolve(state_index(s), out);
  return out;
}

SmoothedState resolve_state(const CutTangle& t, const State& s) { return StateResolver(t).resolve(s); }

// ---------------------------------------------------------------------------

namespace {

struct HistogramKey {
  std::int64_t exponent;
  std::int64_t trivial;
  std::int64_t eights;
  friend bool operator==(const HistogramKey&, const HistogramKey&) = default;
};

struct HistogramKeyHash {
  std::size_t operator()(const HistogramKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.exponent) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.trivial) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.eights) + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// State counts per (exponent, census); integer counts make the merge exact
/// and independent of thread scheduling.
using Histogram = std::unordered_map<HistogramKey, std::uint64_t, HistogramKeyHash>;

FlatValue evaluate(const Histogram& h) {
  // Sorted so the polynomial arithmetic runs in a fixed order.
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::uint64_t> sorted;
  for (const auto& [k, count] : h) sorted[{k.exponent, k.trivial, k.eights}] += count;
  FlatValue out;
  for (const auto& [k, count] : sorted) {
    const auto& [exponent, trivial, eights] = k;
    out += fv_scale(LaurentPoly::monomial(BigInt(count), exponent), normalize_census({trivial, eights}));
  }
  return out;
}

struct Failure {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr error;
};

[[noreturn]] void rethrow_failure(const Failure& f, int n) {
  const auto state = state_string(state_from_index(f.index, n));
  try {
    std::rethrow_exception(f.error);
  } catch (const EmbeddingViolation& e) {
    throw EmbeddingViolation(e.what(), state);
  } catch (const std::invalid_argument& e) {
    throw EmbeddingViolation(std::string(e.what()), state);
  }
}

class Kernel {
public:
  Kernel(const CutTangle& t, const StateSumOptions& options)
      : tangle_(t), options_(options), resolver_(t), n_(resolver_.crossing_count()) {
    check_cap(n_, options.max_crossings);
    total_ = std::uint64_t{1} << n_;
    if (options.record_states) records_.resize(total_);
  }

  StateSumResult run_serial() {
    Histogram h;
    Failure fail;
    StateResolver resolver = resolver_;
    SmoothedState ss;
    for (std::uint64_t i = 0; i < total_; ++i) {
      try {
        visit(resolver, ss, i, h);
      } catch (...) {
        fail = {i, std::current_exception()};
        break;
      }
    }
    if (fail.error) rethrow_failure(fail, n_);
    return finish(h);
  }

  StateSumResult run_parallel() {
    Histogram total;
    Failure fail;
    const int threads = options_.jobs > 0 ? options_.jobs : omp_get_max_threads();
    const auto count = static_cast<std::int64_t>(total_);
#pragma omp parallel num_threads(threads)
    {
      Histogram local;
      StateResolver resolver = resolver_;
      SmoothedState ss;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < count; ++i) {
        try {
          visit(resolver, ss, static_cast<std::uint64_t>(i), local);
        } catch (...) {
#pragma omp critical(fvj_state_failure)
          {
            if (static_cast<std::uint64_t>(i) < fail.index) fail = {static_cast<std::uint64_t>(i), std::current_exception()};
          }
        }
      }
#pragma omp critical(fvj_state_merge)
      {
        for (const auto& [k, c] : local) total[k] += c;
      }
    }
    if (fail.error) rethrow_failure(fail, n_);
    return finish(total);
  }

private:
  void visit(StateResolver& resolver, SmoothedState& ss, std::uint64_t i, Histogram& h) {
    resolver.resolve(i, ss);
    const ComponentCensus census =
        options_.classifier ? options_.classifier(ss, tangle_.surface) : classify(ss, tangle_.surface);
    if (census.trivial + census.eights < 1) throw EmbeddingViolation("state closes to the empty diagram");
    const std::int64_t exponent = n_ - 2 * static_cast<std::int64_t>(std::popcount(i));
    ++h[{exponent, census.trivial, census.eights}];
    if (options_.record_states) records_[i] = {i, exponent, census};
  }

  StateSumResult finish(const Histogram& h) {
    StateSumResult out;
    out.bracket = evaluate(h);
    out.states = std::move(records_);
    return out;
  }

  const CutTangle& tangle_;
  const StateSumOptions& options_;
  StateResolver resolver_;
  int n_;
  std::uint64_t total_ = 0;
  std::vector<StateRecord> records_;
};

}  // namespace

StateSumResult evaluate_states(const CutTangle& t, const StateSumOptions& options) {
  return Kernel(t, options).run_parallel();
}

StateSumResult evaluate_states_serial(const CutTangle& t, const StateSumOptions& options) {
  return Kernel(t, options).run_serial();
}

FlatValue flat_bracket(const CutTangle& t, const StateSumOptions& options) {
  StateSumOptions o = options;
  o.record_states = false;
  return evaluate_states(t, o).bracket;
}

FlatValue flat_bracket_serial(const CutTangle& t, const StateSumOptions& options) {
  StateSumOptions o = options;
  o.record_states = false;
  return evaluate_states_serial(t, o).bracket;
}

FlatValue flat_jones(const CutTangle& t, const StateSumOptions& options) {
  return fv_scale(writhe_prefactor(writhe(t)), flat_bracket(t, options));
}

FlatValue state_contribution(std::int64_t exponent, const ComponentCensus& census) {
  return fv_scale(LaurentPoly::monomial(1, exponent), normalize_census(census));
}

}  // namespace fvj

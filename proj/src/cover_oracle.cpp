#include "fvj/cover_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <omp.h>

#include "fvj/closure.hpp"
#include "fvj/errors.hpp"

namespace fvj {

namespace {

Homology canonical_sign(Homology h) {
  if (h.p < 0 || (h.p == 0 && h.q < 0)) return {-h.p, -h.q};
  return h;
}

std::string class_string(const Homology& h) {
  return "(" + std::to_string(h.p) + ", " + std::to_string(h.q) + ")";
}

}  // namespace

std::vector<TracedComponent> trace_components(const SmoothedState& s, const SurfaceSpec& surface) {
  const auto& L = s.layout;
  if (static_cast<int>(s.partner.size()) != L.size()) throw std::invalid_argument("matching size does not fit layout");
  if (!surface.is_torus() && L.m2 != 0) throw std::invalid_argument("cylinder state with top/bottom slots");

  std::vector<TracedComponent> out;
  std::vector<bool> seen(static_cast<std::size_t>(L.size()), false);
  for (int start = 0; start < L.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    TracedComponent comp;
    int at = start;
    do {
      const int across = s.partner[static_cast<std::size_t>(at)];
      if (across < 0 || across >= L.size() || s.partner[static_cast<std::size_t>(across)] != at)
        throw EmbeddingViolation("boundary matching is not an involution");
      seen[static_cast<std::size_t>(at)] = true;
      seen[static_cast<std::size_t>(across)] = true;
      comp.cycle.push_back({at, StepVia::interior});
      comp.cycle.push_back({across, StepVia::closure});
      switch (L.side_of(across)) {
        case Side::right: ++comp.homology.p; break;
        case Side::left: --comp.homology.p; break;
        case Side::top: ++comp.homology.q; break;
        case Side::bottom: --comp.homology.q; break;
      }
      at = L.opposite(across);
    } while (at != start);
    out.push_back(std::move(comp));
  }

  std::optional<Homology> shared;
  for (const auto& c : out) {
    const auto& h = c.homology;
    if (h.is_null()) continue;
    if (!surface.is_torus()) {
      if (std::llabs(h.p) > 1) throw EmbeddingViolation("cylinder component winds " + std::to_string(h.p) + " times");
      continue;
    }
    if (std::gcd(h.p, h.q) != 1) throw EmbeddingViolation("torus class " + class_string(h) + " is not primitive");
    const auto canon = canonical_sign(h);
    if (shared && *shared != canon)
      throw EmbeddingViolation("essential components in classes " + class_string(*shared) + " and " + class_string(canon));
    shared = canon;
  }

  for (std::int64_t k = 0; k < s.interior_loops; ++k) out.push_back({});
  return out;
}

std::vector<TracedComponent> trace_components(const SmoothedState& s, const CutTangle& t) {
  return trace_components(s, t.surface);
}

ComponentCensus oracle_census(const SmoothedState& s, const SurfaceSpec& surface) {
  // Interior loops are counted directly instead of materializing them.
  SmoothedState boundary_only = s;
  boundary_only.interior_loops = 0;
  const auto comps = trace_components(boundary_only, surface);

  ComponentCensus census{s.interior_loops, 0};
  std::int64_t essential = 0;
  Homology cls;
  for (const auto& c : comps) {
    if (c.homology.is_null()) {
      ++census.trivial;
    } else {
      ++essential;
      cls = c.homology;
    }
  }
  if (essential == 0) return census;
  const std::int64_t crossings = surface.is_torus()
                                     ? std::gcd(surface.d1 * std::llabs(cls.q), surface.d2 * std::llabs(cls.p)) - 1
                                     : surface.d - 1;
  if (crossings % 2 == 0)
    census.trivial += essential;
  else
    census.eights = essential;
  return census;
}

ComponentCensus oracle_census(const SmoothedState& s, const CutTangle& t) { return oracle_census(s, t.surface); }

BlockIdentityReport block_identities(std::int64_t d1, std::int64_t d2, std::int64_t m1, std::int64_t m2) {
  if (d1 < 1 || d2 < 1 || m1 < 1 || m2 < 1) throw std::invalid_argument("block identities need positive arguments");
  const std::int64_t a = d1 * m2;
  const std::int64_t b = d2 * m1;
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t gm = std::gcd(m1, m2);
  const std::int64_t product = a * b;

  BlockIdentityReport r;
  r.exact = product % (g * gm) == 0 && product % (g * g) == 0 && g % gm == 0;
  r.v1 = product / (g * gm);
  r.v2 = product / (g * g);
  r.v3 = (g / gm) * r.v2;
  const std::int64_t ra = a / g;
  const std::int64_t rb = b / g;
  r.v2_lcm_form = (ra * rb) % std::gcd(ra, rb) == 0 && (ra * rb) / std::gcd(ra, rb) == r.v2;
  r.ok = r.exact && r.v1 == r.v3 && r.v2_lcm_form;
  return r;
}

OracleReport oracle_check(const CutTangle& t, const StateSumOptions& options) {
  StateResolver base(t);
  const int n = base.crossing_count();
  if (n > options.max_crossings || n > 62)
    throw ResourceError("state enumeration over " + std::to_string(n) + " crossings exceeds the cap of " +
                        std::to_string(std::min(options.max_crossings, 62)));
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();

  OracleReport report;
  report.states_checked = static_cast<std::uint64_t>(total);
#pragma omp parallel num_threads(threads)
  {
    StateResolver resolver = base;
    SmoothedState ss;
    std::vector<OracleMismatch> local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      resolver.resolve(index, ss);
      OracleMismatch m;
      try {
        m.classified = options.classifier ? options.classifier(ss, t.surface) : classify(ss, t.surface);
      } catch (const std::exception& e) {
        m.error = std::string("classifier: ") + e.what();
      }
      try {
        m.oracle = oracle_census(ss, t.surface);
      } catch (const std::exception& e) {
        m.error += (m.error.empty() ? "" : "; ") + std::string("oracle: ") + e.what();
      }
      if (m.error.empty() && m.classified == m.oracle) continue;
      m.state_index = index;
      m.state = state_string(state_from_index(index, n));
      m.exponent = n - 2 * static_cast<std::int64_t>(std::popcount(index));
      m.smoothed = ss;
      local.push_back(std::move(m));
    }
#pragma omp critical(fvj_oracle_merge)
    {
      for (auto& m : local) report.mismatches.push_back(std::move(m));
    }
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const auto& x, const auto& y) { return x.state_index < y.state_index; });
  return report;
}

}  // namespace fvj

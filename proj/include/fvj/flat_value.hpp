#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fvj/census.hpp"
#include "fvj/laurent.hpp"

namespace fvj {

/// Value of the flat-virtual bracket on semi-trivial diagrams.
///
/// Graded by the number e of disjoint flat eights: key 0 is the coefficient of
/// the unknot class, key e >= 1 the coefficient of e disjoint eights. The empty
/// map is zero. Zero polynomials are never stored.
class FlatValue {
public:
  using Grade = std::int64_t;
  using Entries = std::map<Grade, LaurentPoly>;

  FlatValue() = default;
  FlatValue(std::initializer_list<std::pair<const Grade, LaurentPoly>> entries);

  static FlatValue single(Grade eights, LaurentPoly coefficient);

  bool is_zero() const noexcept { return entries_.empty(); }
  const Entries& entries() const noexcept { return entries_; }
  LaurentPoly at(Grade eights) const;

  void add(Grade eights, const LaurentPoly& p);
  FlatValue& operator+=(const FlatValue& rhs);
  friend FlatValue operator+(FlatValue x, const FlatValue& y) { return x += y; }
  friend bool operator==(const FlatValue&, const FlatValue&) = default;

private:
  Entries entries_;
};

FlatValue fv_add(const FlatValue& x, const FlatValue& y);
FlatValue fv_scale(const LaurentPoly& p, const FlatValue& x);
FlatValue operator-(const FlatValue& x);

/// O^t disjoint eight^e evaluated with <O> = 1 and an extra circle worth the
/// loop factor: {0 -> delta^(t-1)} when e = 0, {e -> delta^t} otherwise.
/// Throws std::invalid_argument for the empty census.
FlatValue normalize_census(const ComponentCensus& c);

enum class Format { text, json };

/// Text: one "E^<e>: <poly>" line per grade, ascending, joined by '\n'; "0"
/// for zero. JSON: {"<e>": {"<k>": c}} with coefficients as JSON integers
/// (decimal strings once they leave the int64 range).
std::string render(const FlatValue& x, Format format);
nlohmann::json to_json(const FlatValue& x);
FlatValue from_json(const nlohmann::json& j);

/// Inverse of render(x, Format::json). Throws std::invalid_argument.
FlatValue parse_flat_value_json(std::string_view text);

}  // namespace fvj

#include "fvj/flat_value.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace fvj {

FlatValue::FlatValue(std::initializer_list<std::pair<const Grade, LaurentPoly>> entries) {
  for (const auto& [e, p] : entries) add(e, p);
}

FlatValue FlatValue::single(Grade eights, LaurentPoly coefficient) {
  FlatValue v;
  v.add(eights, coefficient);
  return v;
}

LaurentPoly FlatValue::at(Grade eights) const {
  auto it = entries_.find(eights);
  return it == entries_.end() ? LaurentPoly{} : it->second;
}

void FlatValue::add(Grade eights, const LaurentPoly& p) {
  if (eights < 0) throw std::invalid_argument("negative flat-eight grade");
  if (p.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(eights, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

FlatValue& FlatValue::operator+=(const FlatValue& rhs) {
  for (const auto& [e, p] : rhs.entries_) add(e, p);
  return *this;
}

FlatValue fv_add(const FlatValue& x, const FlatValue& y) { return x + y; }

FlatValue fv_scale(const LaurentPoly& p, const FlatValue& x) {
  FlatValue out;
  for (const auto& [e, q] : x.entries()) out.add(e, p * q);
  return out;
}

FlatValue operator-(const FlatValue& x) { return fv_scale(LaurentPoly::constant(-1), x); }

FlatValue normalize_census(const ComponentCensus& c) {
  if (c.trivial < 0 || c.eights < 0) throw std::invalid_argument("negative census entry");
  if (c.trivial + c.eights < 1) throw std::invalid_argument("empty census has no normalized value");
  const auto circles = static_cast<unsigned>(c.eights == 0 ? c.trivial - 1 : c.trivial);
  return FlatValue::single(c.eights, loop_factor().pow(circles));
}

namespace {

nlohmann::json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

BigInt coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const bool ok = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                    s.find('-', 1) == std::string::npos && s != "-";
    if (!ok) throw std::invalid_argument("bad coefficient string: " + s);
    return BigInt(s);
  }
  throw std::invalid_argument("coefficient must be an integer or decimal string");
}

std::int64_t parse_key(const std::string& key) {
  std::int64_t v = 0;
  const auto* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc{} || ptr != end || key.empty()) throw std::invalid_argument("bad integer key: " + key);
  return v;
}

}  // namespace

nlohmann::json to_json(const FlatValue& x) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, p] : x.entries()) {
    nlohmann::json poly = nlohmann::json::object();
    for (const auto& [k, c] : p.terms()) poly[std::to_string(k)] = coefficient_json(c);
    out[std::to_string(e)] = std::move(poly);
  }
  return out;
}

FlatValue from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("flat value must be a JSON object");
  FlatValue out;
  for (const auto& [ekey, poly] : j.items()) {
    if (!poly.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
    LaurentPoly p;
    for (const auto& [kkey, c] : poly.items()) p.add_term(parse_key(kkey), coefficient_from_json(c));
    out.add(parse_key(ekey), p);
  }
  return out;
}

std::string render(const FlatValue& x, Format format) {
  if (format == Format::json) return to_json(x).dump();
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [e, p] : x.entries()) {
    if (!out.empty()) out += '\n';
    out += "E^" + std::to_string(e) + ": " + p.to_string();
  }
  return out;
}

FlatValue parse_flat_value_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  return from_json(j);
}

}  // namespace fvj

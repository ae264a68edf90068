#include "fvj/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace fvj {

std::string_view code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::surface_parameter: return "E_SURFACE";
    case ViolationCode::arc_multiplicity: return "E_ARC_MULT";
    case ViolationCode::arc_orientation: return "E_ORIENT";
    case ViolationCode::closure_orientation: return "E_CLOSURE_ORIENT";
    case ViolationCode::side_count: return "E_SIDE_COUNT";
    case ViolationCode::crossing_form: return "E_CROSSING";
    case ViolationCode::negative_loops: return "E_LOOPS";
  }
  return "E_UNKNOWN";
}

std::string Violation::to_string() const {
  std::string out(code_name(code));
  switch (code) {
    case ViolationCode::surface_parameter:
      out += " param=" + where + " value=" + std::to_string(value);
      break;
    case ViolationCode::arc_multiplicity:
      out += " arc=" + std::to_string(arc) + " count=" + std::to_string(value);
      break;
    case ViolationCode::arc_orientation:
      out += " arc=" + std::to_string(arc);
      break;
    case ViolationCode::closure_orientation:
      out += " pair=" + where + " index=" + std::to_string(value);
      break;
    case ViolationCode::side_count:
      out += " sides=" + where;
      break;
    case ViolationCode::crossing_form:
      out += " crossing=" + std::to_string(value);
      break;
    case ViolationCode::negative_loops:
      out += " value=" + std::to_string(value);
      break;
  }
  return out;
}

namespace {

std::string join_violations(const std::vector<Violation>& v) {
  std::string out = "invalid tangle:";
  for (const auto& x : v) out += " " + x.to_string() + ";";
  return out;
}

}  // namespace

InvalidTangle::InvalidTangle(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const CutTangle& t) {
  std::vector<Violation> out;

  if (t.surface.is_torus()) {
    if (t.surface.d1 < 2) out.push_back({ViolationCode::surface_parameter, 0, "d1", t.surface.d1});
    if (t.surface.d2 < 2) out.push_back({ViolationCode::surface_parameter, 0, "d2", t.surface.d2});
  } else if (t.surface.d < 2) {
    out.push_back({ViolationCode::surface_parameter, 0, "d", t.surface.d});
  }

  if (t.right.size() != t.left.size()) out.push_back({ViolationCode::side_count, 0, "right/left", 0});
  if (t.surface.is_torus()) {
    if (t.top.size() != t.bottom.size()) out.push_back({ViolationCode::side_count, 0, "top/bottom", 0});
  } else if (!t.top.empty() || !t.bottom.empty()) {
    out.push_back({ViolationCode::side_count, 0, "top/bottom", 0});
  }

  for (const auto& c : t.crossings)
    if (c.over_in != 1 && c.over_in != 3) out.push_back({ViolationCode::crossing_form, 0, "", c.id});

  if (t.free_loops < 0) out.push_back({ViolationCode::negative_loops, 0, "", t.free_loops});

  // arc -> (occurrences, head occurrences)
  std::map<ArcLabel, std::pair<int, int>> usage;
  auto note = [&](ArcLabel arc, bool head) {
    auto& u = usage[arc];
    ++u.first;
    if (head) ++u.second;
  };
  for (const auto& c : t.crossings) {
    const bool over_ok = c.over_in == 1 || c.over_in == 3;
    for (int k = 0; k < 4; ++k) {
      bool head = k == 0;
      if (over_ok && k == c.over_in) head = true;
      note(c.slots[static_cast<std::size_t>(k)], head);
    }
  }
  for (const auto* side : {&t.right, &t.left, &t.top, &t.bottom})
    for (const auto& end : *side) note(end.arc, end.dir == EndDirection::out);

  for (const auto& [arc, u] : usage) {
    if (arc <= 0 || u.first != 2)
      out.push_back({ViolationCode::arc_multiplicity, arc, "", u.first});
    else if (u.second != 1)
      out.push_back({ViolationCode::arc_orientation, arc, "", 0});
  }

  auto closure_pairs = [&](const std::vector<BoundaryEnd>& a, const std::vector<BoundaryEnd>& b,
                           const char* name) {
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a[i].dir == b[i].dir)
        out.push_back({ViolationCode::closure_orientation, 0, name, static_cast<std::int64_t>(i + 1)});
  };
  closure_pairs(t.right, t.left, "right/left");
  if (t.surface.is_torus()) closure_pairs(t.top, t.bottom, "top/bottom");

  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

template <class Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  CutTangle run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      ++line_no_;
      auto line = text_.substr(pos, nl - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      parse_line(tokenize(line));
      pos = nl + 1;
    }
    finish();
    return std::move(t_);
  }

private:
  [[noreturn]] void fail(std::size_t column, const std::string& what) const {
    throw ParseError(line_no_, column, what);
  }

  void parse_line(const std::vector<Token>& toks) {
    if (toks.empty()) return;
    const auto& head = toks.front();
    if (head.text == "surface") return parse_surface(toks);
    if (head.text == "X") return parse_crossing(toks);
    if (head.text == "loops") return parse_loops(toks);
    if (auto colon = head.text.find(':'); colon != std::string_view::npos) return parse_side(toks, colon);
    fail(head.column, "unknown directive '" + std::string(head.text) + "'");
  }

  void parse_surface(const std::vector<Token>& toks) {
    if (surface_line_) fail(toks[0].column, "duplicate surface line");
    surface_line_ = line_no_;
    if (toks.size() < 2) fail(toks[0].column, "expected 'cylinder' or 'torus'");
    std::map<std::string_view, int> params;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const auto eq = toks[i].text.find('=');
      if (eq == std::string_view::npos) fail(toks[i].column, "expected <name>=<int>");
      const auto key = toks[i].text.substr(0, eq);
      const auto value = to_int<int>(toks[i].text.substr(eq + 1));
      if (!value) fail(toks[i].column + eq + 1, "expected integer value");
      if (!params.emplace(key, *value).second) fail(toks[i].column, "duplicate parameter");
    }
    auto take = [&](std::string_view key) {
      auto it = params.find(key);
      if (it == params.end()) fail(toks[1].column, "missing parameter " + std::string(key));
      const int v = it->second;
      params.erase(it);
      return v;
    };
    if (toks[1].text == "cylinder") {
      t_.surface = SurfaceSpec::cylinder(take("d"));
    } else if (toks[1].text == "torus") {
      const int d1 = take("d1");
      const int d2 = take("d2");
      t_.surface = SurfaceSpec::torus(d1, d2);
    } else {
      fail(toks[1].column, "expected 'cylinder' or 'torus'");
    }
    if (!params.empty()) fail(toks[1].column, "unexpected parameter " + std::string(params.begin()->first));
  }

  void parse_side(const std::vector<Token>& toks, std::size_t colon) {
    const auto& head = toks.front();
    const auto name = head.text.substr(0, colon);
    std::vector<BoundaryEnd>* side = nullptr;
    bool* seen = nullptr;
    if (name == "right") side = &t_.right, seen = &seen_right_;
    else if (name == "left") side = &t_.left, seen = &seen_left_;
    else if (name == "top") side = &t_.top, seen = &seen_top_;
    else if (name == "bottom") side = &t_.bottom, seen = &seen_bottom_;
    else fail(head.column, "unknown side '" + std::string(name) + "'");
    if (*seen) fail(head.column, "duplicate " + std::string(name) + " line");
    *seen = true;
    if ((name == "top" || name == "bottom") && !torus_side_line_) torus_side_line_ = line_no_, torus_side_col_ = head.column;

    std::vector<Token> items;
    if (colon + 1 < head.text.size()) items.push_back({head.text.substr(colon + 1), head.column + colon + 1});
    items.insert(items.end(), toks.begin() + 1, toks.end());
    for (const auto& tok : items) {
      const char d = tok.text.back();
      if (d != '+' && d != '-') fail(tok.column + tok.text.size() - 1, "expected direction '+' or '-'");
      const auto arc = to_int<ArcLabel>(tok.text.substr(0, tok.text.size() - 1));
      if (!arc || *arc <= 0) fail(tok.column, "arc label must be a positive integer");
      side->push_back({*arc, d == '+' ? EndDirection::out : EndDirection::in});
    }
  }

  void parse_crossing(const std::vector<Token>& toks) {
    if (toks.size() != 6) fail(toks[0].column, "expected 'X p0 p1 p2 p3 over=<1|3>'");
    CrossingRecord c;
    c.id = static_cast<int>(t_.crossings.size()) + 1;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto arc = to_int<ArcLabel>(toks[k + 1].text);
      if (!arc || *arc <= 0) fail(toks[k + 1].column, "arc label must be a positive integer");
      c.slots[k] = *arc;
    }
    const auto& ov = toks[5];
    if (ov.text == "over=1") c.over_in = 1;
    else if (ov.text == "over=3") c.over_in = 3;
    else fail(ov.column, "expected over=1 or over=3");
    t_.crossings.push_back(c);
  }

  void parse_loops(const std::vector<Token>& toks) {
    if (seen_loops_) fail(toks[0].column, "duplicate loops line");
    seen_loops_ = true;
    if (toks.size() != 2) fail(toks[0].column, "expected 'loops <count>'");
    const auto n = to_int<std::int64_t>(toks[1].text);
    if (!n || *n < 0) fail(toks[1].column, "loop count must be a non-negative integer");
    t_.free_loops = *n;
  }

  void finish() {
    const auto end_line = line_no_;
    if (!surface_line_) throw ParseError(end_line, 1, "missing surface line");
    if (!seen_right_) throw ParseError(end_line, 1, "missing right line");
    if (!seen_left_) throw ParseError(end_line, 1, "missing left line");
    if (t_.surface.is_torus()) {
      if (!seen_top_) throw ParseError(end_line, 1, "missing top line (required for torus)");
      if (!seen_bottom_) throw ParseError(end_line, 1, "missing bottom line (required for torus)");
    } else if (torus_side_line_) {
      throw ParseError(torus_side_line_, torus_side_col_, "top/bottom lines are only allowed for torus");
    }
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  CutTangle t_;
  std::size_t surface_line_ = 0;
  std::size_t torus_side_line_ = 0;
  std::size_t torus_side_col_ = 0;
  bool seen_right_ = false, seen_left_ = false, seen_top_ = false, seen_bottom_ = false;
  bool seen_loops_ = false;
};

void write_side(std::ostringstream& os, const char* name, const std::vector<BoundaryEnd>& side) {
  os << name << ':';
  for (const auto& e : side) os << ' ' << e.arc << (e.dir == EndDirection::out ? '+' : '-');
  os << '\n';
}

}  // namespace

CutTangle parse_tangle_syntax(std::string_view text) { return Parser(text).run(); }

CutTangle parse_tangle(std::string_view text) {
  CutTangle t = parse_tangle_syntax(text);
  if (auto v = validate(t); !v.empty()) throw InvalidTangle(std::move(v));
  return t;
}

std::string serialize(const CutTangle& t) {
  std::ostringstream os;
  if (t.surface.is_torus())
    os << "surface torus d1=" << t.surface.d1 << " d2=" << t.surface.d2 << '\n';
  else
    os << "surface cylinder d=" << t.surface.d << '\n';
  write_side(os, "right", t.right);
  write_side(os, "left", t.left);
  if (t.surface.is_torus()) {
    write_side(os, "top", t.top);
    write_side(os, "bottom", t.bottom);
  }
  for (const auto& c : t.crossings)
    os << "X " << c.slots[0] << ' ' << c.slots[1] << ' ' << c.slots[2] << ' ' << c.slots[3]
       << " over=" << c.over_in << '\n';
  if (t.free_loops != 0) os << "loops " << t.free_loops << '\n';
  return os.str();
}

int crossing_sign(const CrossingRecord& c) { return c.over_in == 3 ? +1 : -1; }

std::int64_t writhe(const CutTangle& t) {
  std::int64_t w = 0;
  for (const auto& c : t.crossings) w += crossing_sign(c);
  return w;
}

CrossingRecord mirror(const CrossingRecord& c) {
  // The old over strand becomes the under strand; its incoming slot is the new p0.
  const auto start = static_cast<std::size_t>(c.over_in);
  CrossingRecord m = c;
  for (std::size_t k = 0; k < 4; ++k) m.slots[k] = c.slots[(start + k) % 4];
  // Old p0 sits at index (4 - over_in) in the rotated list.
  m.over_in = 4 - c.over_in;
  return m;
}

CutTangle mirror(const CutTangle& t) {
  CutTangle m = t;
  for (auto& c : m.crossings) c = mirror(c);
  return m;
}

}  // namespace fvj

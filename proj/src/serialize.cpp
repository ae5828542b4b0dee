#include "fuzzydyn/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fuzzydyn {

namespace {

[[noreturn]] void fail(size_t line, const std::string& what) {
  throw usage_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

ShiftWord parse_word(const std::string& s, int alphabet, size_t line) {
  ShiftWord w;
  for (char c : s) {
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'z')
      v = 10 + (c - 'a');
    else
      fail(line, std::string("bad symbol '") + c + "'");
    if (v >= alphabet) fail(line, std::string("symbol '") + c + "' outside the alphabet");
    w.push_back(static_cast<uint8_t>(v));
  }
  return w;
}

struct Cursor {
  std::vector<std::pair<size_t, std::vector<std::string>>> lines;  // (lineno, tokens)
  size_t pos = 0;

  explicit Cursor(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    size_t no = 0;
    while (std::getline(is, line)) {
      ++no;
      auto toks = tokenize(line);
      if (!toks.empty()) lines.emplace_back(no, std::move(toks));
    }
  }
  bool done() const { return pos >= lines.size(); }
  const std::vector<std::string>& peek() const { return lines[pos].second; }
  size_t lineno() const { return done() ? lines.back().first + 1 : lines[pos].first; }
};

Space parse_space(Cursor& cur) {
  if (cur.done()) fail(cur.lineno(), "missing space header");
  auto toks = cur.peek();
  size_t line = cur.lineno();
  ++cur.pos;
  if (toks.size() < 2 || toks[0] != "space") fail(line, "expected 'space <kind> ...'");
  if (toks[1] == "shift") {
    if (toks.size() != 3) fail(line, "expected 'space shift <alphabet>'");
    return Space::shift(std::stoi(toks[2]));
  }
  if (toks[1] == "circle") {
    if (toks.size() != 3) fail(line, "expected 'space circle <bits>'");
    return Space::circle(std::stoi(toks[2]));
  }
  if (toks[1] == "finite") {
    if (toks.size() != 3) fail(line, "expected 'space finite <n>'");
    int n = std::stoi(toks[2]);
    if (cur.done() || cur.peek()[0] != "labels") fail(cur.lineno(), "expected 'labels ...'");
    auto lab = cur.peek();
    size_t lab_line = cur.lineno();
    ++cur.pos;
    if (static_cast<int>(lab.size()) != n + 1) fail(lab_line, "label count mismatch");
    std::vector<std::string> labels(lab.begin() + 1, lab.end());
    std::vector<double> dist;
    for (int i = 0; i < n; ++i) {
      if (cur.done() || cur.peek()[0] != "row") fail(cur.lineno(), "expected n 'row ...' lines");
      auto row = cur.peek();
      size_t row_line = cur.lineno();
      ++cur.pos;
      if (static_cast<int>(row.size()) != n + 1) fail(row_line, "row length mismatch");
      for (int j = 0; j < n; ++j) dist.push_back(std::stod(row[j + 1]));
    }
    return Space::finite(std::move(labels), std::move(dist));
  }
  fail(line, "unknown space kind '" + toks[1] + "'");
}

}  // namespace

Point parse_point_token(const Space& sp, const std::string& token) {
  if (sp.is_finite()) {
    const auto& f = sp.finite_desc();
    auto it = std::find(f.labels.begin(), f.labels.end(), token);
    if (it == f.labels.end()) throw usage_error("unknown label '" + token + "'");
    return Point::finite(static_cast<int>(it - f.labels.begin()));
  }
  if (sp.is_shift()) {
    auto bar = token.find('|');
    if (bar == std::string::npos) throw usage_error("shift point needs prefix|cycle");
    ShiftWord prefix = parse_word(token.substr(0, bar), sp.shift_desc().alphabet, 0);
    ShiftWord cycle = parse_word(token.substr(bar + 1), sp.shift_desc().alphabet, 0);
    return Point::shift(std::move(prefix), std::move(cycle));
  }
  if (sp.is_circle()) {
    uint64_t num = std::stoull(token);
    if (num != (num & circle_mask(sp.circle_desc().precision_bits)))
      throw usage_error("circle numerator exceeds the precision");
    return Point::circle(num);
  }
  throw usage_error("product points have no text form");
}

std::string point_token(const Space& sp, const Point& p) {
  if (sp.is_finite()) return sp.finite_desc().labels[p.as_finite().index];
  if (sp.is_shift()) return point_str(p);
  if (sp.is_circle()) return std::to_string(p.as_circle().num);
  throw usage_error("product points have no text form");
}

ParsedCompact parse_compact_text(const std::string& text) {
  Cursor cur(text);
  Space sp = parse_space(cur);
  std::vector<Point> pts;
  while (!cur.done()) {
    auto toks = cur.peek();
    size_t line = cur.lineno();
    ++cur.pos;
    if (toks[0] != "p" || toks.size() != 2) fail(line, "expected 'p <point>'");
    try {
      pts.push_back(parse_point_token(sp, toks[1]));
    } catch (const usage_error& e) {
      fail(line, e.what());
    }
  }
  if (pts.empty()) fail(cur.lineno(), "compact set must be non-empty");
  return {std::move(sp), CompactSet::of(std::move(pts))};
}

ParsedFuzzy parse_fuzzy_text(const std::string& text) {
  Cursor cur(text);
  Space sp = parse_space(cur);
  std::vector<std::pair<Rational, CompactSet>> pairs;
  Rational level;
  std::vector<Point> pts;
  bool in_level = false;
  auto flush = [&](size_t line) {
    if (!in_level) return;
    if (pts.empty()) fail(line, "level without points");
    pairs.emplace_back(level, CompactSet::of(pts));
    pts.clear();
  };
  while (!cur.done()) {
    auto toks = cur.peek();
    size_t line = cur.lineno();
    ++cur.pos;
    if (toks[0] == "level") {
      if (toks.size() != 2) fail(line, "expected 'level <rational>'");
      flush(line);
      try {
        level = Rational::parse(toks[1]);
      } catch (const std::exception& e) {
        fail(line, e.what());
      }
      in_level = true;
    } else if (toks[0] == "p") {
      if (!in_level) fail(line, "point before any level");
      if (toks.size() != 2) fail(line, "expected 'p <point>'");
      try {
        pts.push_back(parse_point_token(sp, toks[1]));
      } catch (const usage_error& e) {
        fail(line, e.what());
      }
    } else {
      fail(line, "expected 'level' or 'p' record");
    }
  }
  flush(cur.lineno());
  if (pairs.empty()) fail(cur.lineno(), "fuzzy set needs at least one level");
  try {
    return {std::move(sp), from_max_combination(std::move(pairs))};
  } catch (const usage_error& e) {
    fail(cur.lineno(), e.what());
  }
}

namespace {

std::string space_header(const Space& sp) {
  std::ostringstream os;
  if (sp.is_shift()) {
    os << "space shift " << sp.shift_desc().alphabet << "\n";
  } else if (sp.is_circle()) {
    os << "space circle " << sp.circle_desc().precision_bits << "\n";
  } else if (sp.is_finite()) {
    const auto& f = sp.finite_desc();
    os << "space finite " << f.size() << "\nlabels";
    for (const auto& l : f.labels) os << " " << l;
    os << "\n";
    for (int i = 0; i < f.size(); ++i) {
      os << "row";
      for (int j = 0; j < f.size(); ++j) {
        os << " ";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", f.at(i, j));
        os << buf;
      }
      os << "\n";
    }
  } else {
    throw usage_error("product spaces have no text form");
  }
  return os.str();
}

}  // namespace

std::string serialize_compact(const Space& sp, const CompactSet& k) {
  std::string out = space_header(sp);
  for (const auto& p : k.points()) out += "p " + point_token(sp, p) + "\n";
  return out;
}

std::string serialize_fuzzy(const Space& sp, const StepFuzzySet& u) {
  std::string out = space_header(sp);
  for (size_t j = 0; j < u.levels.size(); ++j) {
    out += "level " + u.levels[j].str() + "\n";
    for (const auto& p : u.level_sets[j].points()) out += "p " + point_token(sp, p) + "\n";
  }
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

ParsedFuzzy load_fuzzy_file(const std::string& path) { return parse_fuzzy_text(read_file(path)); }
ParsedCompact load_compact_file(const std::string& path) {
  return parse_compact_text(read_file(path));
}

}  // namespace fuzzydyn

#include "presentation.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include <json.hpp>

#include "error.hpp"

namespace fillprobe {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t GroupPresentation::max_relator_length() const {
  std::size_t m = 0;
  for (const auto& r : relators) m = std::max(m, r.size());
  return m;
}

std::string GroupPresentation::canonical_text() const {
  std::string out = "generators:";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : " ") + generators[i];
  out += '\n';
  for (const auto& r : relators) out += "relator: " + format_word(r, generators) + "\n";
  for (const auto& rule : rules)
    out += "rule: " + format_word(rule.lhs, generators) + " -> " + format_word(rule.rhs, generators) + "\n";
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Tracks the position of a substring inside the whole source for diagnostics.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column_base = 1;  // column of text[0] within its line

  std::size_t column() const { return column_base + pos; }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line, column()); }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() { return pos >= text.size(); }
};

Word parse_word_at(Cursor& cur, const std::vector<std::string>& generators) {
  Word w;
  cur.skip_ws();
  if (cur.text.substr(cur.pos) == "1") {
    cur.pos = cur.text.size();
    return w;
  }
  while (!cur.done()) {
    if (!is_ident_start(cur.text[cur.pos])) cur.fail(std::string("unexpected character '") + cur.text[cur.pos] + "'");
    std::size_t start = cur.pos;
    while (!cur.done() && is_ident_char(cur.text[cur.pos])) ++cur.pos;
    std::string name(cur.text.substr(start, cur.pos - start));
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) {
      cur.pos = start;
      cur.fail("unknown generator '" + name + "'");
    }
    Letter x = static_cast<Letter>(it - generators.begin()) + 1;
    long power = 1;
    if (!cur.done() && cur.text[cur.pos] == '^') {
      ++cur.pos;
      bool negative = false;
      if (!cur.done() && (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+')) {
        negative = cur.text[cur.pos] == '-';
        ++cur.pos;
      }
      std::size_t digits = cur.pos;
      while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
      if (digits == cur.pos) cur.fail("expected exponent after '^'");
      if (cur.pos - digits > 6) cur.fail("exponent too large");
      power = std::stol(std::string(cur.text.substr(digits, cur.pos - digits)));
      if (negative) power = -power;
    }
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.text[cur.pos])))
      cur.fail(std::string("unexpected character '") + cur.text[cur.pos] + "'");
    for (long i = 0; i < std::labs(power); ++i) w.push_back(power < 0 ? -x : x);
    cur.skip_ws();
  }
  return w;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

void add_generators(GroupPresentation& p, std::string_view list, std::size_t line, std::size_t column_base) {
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name = trim(list.substr(start, comma - start));
    std::size_t col = column_base + start;
    if (name.empty()) {
      if (comma == list.size() && start != 0 && p.generators.empty()) break;
      if (!(comma == list.size() && trim(list).empty())) throw SyntaxError("empty generator name", line, col);
    } else {
      if (!is_ident_start(name[0]) || !std::all_of(name.begin(), name.end(), is_ident_char))
        throw SyntaxError("invalid generator name '" + name + "'", line, col);
      if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
        throw SyntaxError("duplicate generator '" + name + "'", line, col);
      p.generators.push_back(name);
    }
    start = comma + 1;
  }
}

void add_relator(GroupPresentation& p, Word w, const std::string& source) {
  Word r = cyclic_reduce(w);
  if (r.empty()) {
    p.warnings.push_back("relator '" + source + "' reduces to the identity and was dropped");
    return;
  }
  p.relators.push_back(std::move(r));
}

void add_rule(GroupPresentation& p, std::string_view body, std::size_t line, std::size_t column_base) {
  auto arrow = body.find("->");
  if (arrow == std::string_view::npos) throw SyntaxError("rule needs '->'", line, column_base);
  Cursor lhs{body.substr(0, arrow), 0, line, column_base};
  Cursor rhs{body.substr(arrow + 2), 0, line, column_base + arrow + 2};
  RewriteRule rule{parse_word_at(lhs, p.generators), parse_word_at(rhs, p.generators)};
  p.rules.push_back(std::move(rule));
}

GroupPresentation parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset only; report it as a column on line 1 of the flattened input
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw SyntaxError("JSON presentation needs a 'generators' array", 1, 1);
  GroupPresentation p;
  std::string names;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw SyntaxError("generator names must be strings", 1, 1);
    names += (names.empty() ? "" : ",") + g.get<std::string>();
  }
  add_generators(p, names, 1, 1);
  auto read_word = [&](const nlohmann::json& w) -> Word {
    if (w.is_string()) {
      Cursor cur{w.get_ref<const std::string&>(), 0, 1, 1};
      return parse_word_at(cur, p.generators);
    }
    if (w.is_array()) {
      Word out;
      for (const auto& x : w) {
        if (!x.is_number_integer()) throw SyntaxError("word arrays hold signed generator indices", 1, 1);
        int v = x.get<int>();
        if (v == 0 || static_cast<std::size_t>(std::abs(v)) > p.generators.size())
          throw SyntaxError("letter index " + std::to_string(v) + " out of range", 1, 1);
        out.push_back(v);
      }
      return out;
    }
    throw SyntaxError("words must be strings or integer arrays", 1, 1);
  };
  if (j.contains("relators")) {
    for (const auto& r : j["relators"]) add_relator(p, read_word(r), r.dump());
  }
  if (j.contains("rules")) {
    for (const auto& r : j["rules"]) {
      if (r.is_array() && r.size() == 2) {
        p.rules.push_back({read_word(r[0]), read_word(r[1])});
      } else if (r.is_object() && r.contains("lhs") && r.contains("rhs")) {
        p.rules.push_back({read_word(r["lhs"]), read_word(r["rhs"])});
      } else {
        throw SyntaxError("rules are [lhs, rhs] pairs", 1, 1);
      }
    }
  }
  return p;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  Cursor cur{text, 0, 1, 1};
  return parse_word_at(cur, generators);
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

GroupPresentation parse_presentation(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  GroupPresentation p;
  bool have_generators = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    auto colon = line.find(':');
    auto bar = line.find('|');
    if (bar != std::string_view::npos && (colon == std::string_view::npos || bar < colon)) {
      if (have_generators) throw SyntaxError("compact form must be the only declaration", line_no, 1);
      add_generators(p, line.substr(0, bar), line_no, 1);
      have_generators = true;
      std::string_view rest = line.substr(bar + 1);
      std::size_t s = 0;
      while (s <= rest.size()) {
        std::size_t comma = rest.find(',', s);
        if (comma == std::string_view::npos) comma = rest.size();
        std::string_view piece = rest.substr(s, comma - s);
        if (!trim(piece).empty()) {
          Cursor cur{piece, 0, line_no, bar + 2 + s};
          add_relator(p, parse_word_at(cur, p.generators), trim(piece));
        }
        s = comma + 1;
      }
      continue;
    }
    if (colon == std::string_view::npos) throw SyntaxError("expected 'key: value'", line_no, 1);
    std::string key = trim(line.substr(0, colon));
    std::string_view body = line.substr(colon + 1);
    std::size_t body_col = colon + 2;
    if (key == "generators") {
      if (have_generators) throw SyntaxError("generators declared twice", line_no, 1);
      add_generators(p, body, line_no, body_col);
      have_generators = true;
    } else if (key == "relator" || key == "rule") {
      if (!have_generators) throw SyntaxError("'generators:' must come first", line_no, 1);
      if (key == "rule") {
        add_rule(p, body, line_no, body_col);
      } else {
        Cursor cur{body, 0, line_no, body_col};
        add_relator(p, parse_word_at(cur, p.generators), trim(body));
      }
    } else {
      throw SyntaxError("unknown key '" + key + "'", line_no, 1);
    }
  }
  if (!have_generators) throw SyntaxError("missing generator declaration", line_no == 0 ? 1 : line_no, 1);
  return p;
}

}  // namespace fillprobe

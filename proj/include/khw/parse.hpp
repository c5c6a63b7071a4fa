#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "khw/braid3.hpp"
#include "khw/diagram.hpp"

namespace khw {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail_parse {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  int integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw parse_error("expected integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
  }
};

// letters of one braid factor appended `reps` times (negative reps reverse
// and invert)
inline void repeat_into(BraidWord& w, const std::vector<std::pair<int, int>>& letters,
                        int reps) {
  if (reps >= 0) {
    for (int r = 0; r < reps; ++r)
      for (auto [g, e] : letters) w.letters.emplace_back(g, e);
  } else {
    for (int r = 0; r < -reps; ++r)
      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.emplace_back(it->first, -it->second);
  }
}

inline std::vector<std::pair<int, int>> parse_factors(Cursor& cur, int& max_gen, char stop);

inline std::vector<std::pair<int, int>> parse_factor(Cursor& cur, int& max_gen) {
  cur.skip_ws();
  std::vector<std::pair<int, int>> letters;
  if (cur.eat('(')) {
    letters = parse_factors(cur, max_gen, ')');
    if (!cur.eat(')')) throw parse_error("missing ')' in braid word");
  } else if (cur.i < cur.s.size() && (cur.s[cur.i] == 's' || cur.s[cur.i] == 'h')) {
    char kind = cur.s[cur.i++];
    if (kind == 's') {
      int gen = cur.integer();
      if (gen < 1) throw parse_error("generator index must be positive");
      max_gen = std::max(max_gen, gen);
      letters = {{gen, 1}};
    } else {
      // h = (s1 s2)^3, the full twist in B3
      max_gen = std::max(max_gen, 2);
      letters = {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}};
    }
  } else {
    throw parse_error("expected 's<k>', 'h' or '(' in braid word");
  }
  int reps = 1;
  if (cur.eat('^')) reps = cur.integer();
  std::vector<std::pair<int, int>> out;
  BraidWord tmp{64, {}};
  repeat_into(tmp, letters, reps);
  return tmp.letters;
}

inline std::vector<std::pair<int, int>> parse_factors(Cursor& cur, int& max_gen, char stop) {
  std::vector<std::pair<int, int>> out;
  for (;;) {
    cur.skip_ws();
    if (cur.i >= cur.s.size() || cur.s[cur.i] == stop) break;
    auto f = parse_factor(cur, max_gen);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

} // namespace detail_parse

/// Braid word grammar: `s1 s2^-1 (s1 s2)^3 h^2`.  Strand count is one more
/// than the largest generator index (at least two).
inline BraidWord parse_braid(const std::string& text) {
  detail_parse::Cursor cur{text};
  int max_gen = 1;
  auto letters = detail_parse::parse_factors(cur, max_gen, '\0');
  if (!cur.done()) throw parse_error("trailing input in braid word");
  if (letters.empty()) throw parse_error("empty braid word");
  BraidWord w{max_gen + 1, {}};
  for (auto [g, e] : letters) w.push(g, e);
  return w;
}

/// PD code: a list of `X[a,b,c,d]` tuples, edges counterclockwise from the
/// incoming under-strand.
inline LinkDiagram parse_pd(const std::string& text) {
  detail_parse::Cursor cur{text};
  std::vector<GeomCrossing> geo;
  while (!cur.done()) {
    cur.skip_ws();
    if (cur.s[cur.i] == 'X' || cur.s[cur.i] == 'x')
      ++cur.i;
    else
      throw parse_error("expected X[a,b,c,d]");
    if (!cur.eat('[')) throw parse_error("expected '['");
    GeomCrossing g;
    g.over13 = true;
    for (int k = 0; k < 4; ++k) {
      g.e[k] = cur.integer();
      if (k < 3 && !cur.eat(',')) throw parse_error("expected ','");
    }
    if (!cur.eat(']')) throw parse_error("expected ']'");
    cur.eat(',');
    geo.push_back(g);
  }
  if (geo.empty()) throw parse_error("empty PD code");
  // orientation hints: slot 0 is the incoming under-strand, so each tuple's
  // first edge has its tail at its other occurrence
  std::map<int, std::vector<int>> occ;
  for (size_t c = 0; c < geo.size(); ++c)
    for (int k = 0; k < 4; ++k) occ[geo[c].e[k]].push_back(4 * static_cast<int>(c) + k);
  std::map<int, int> hints;
  for (size_t c = 0; c < geo.size(); ++c) {
    int e = geo[c].e[0];
    int here = 4 * static_cast<int>(c);
    const auto& v = occ.at(e);
    if (v.size() != 2) throw parse_error("edge " + std::to_string(e) + " does not occur twice");
    hints.emplace(e, v[0] == here ? v[1] : v[0]);
  }
  LinkDiagram d = from_geometry(geo, {}, hints);
  d.check();
  return d;
}

/// Murasugi form syntax: `h^2 * s1^3 s2^-1 s1^2 s2^-2` (Alt),
/// `h^-1 * s2^4` (Power), `h^2 * s1^-3 s2^-1` (Special).
inline MurasugiForm parse_form(const std::string& text) {
  auto star = text.find('*');
  if (star == std::string::npos) throw parse_error("form needs `h^n * tail`");
  detail_parse::Cursor head{text};
  if (!head.eat('h')) throw parse_error("form must start with h");
  int n = head.eat('^') ? head.integer() : 1;
  head.skip_ws();
  if (head.i != star) throw parse_error("unexpected text before '*'");

  std::string tail = text.substr(star + 1);
  detail_parse::Cursor cur{tail};
  std::vector<std::pair<int, int>> powers; // (generator, full exponent)
  while (!cur.done()) {
    cur.skip_ws();
    if (cur.s[cur.i] != 's') throw parse_error("form tail expects s1/s2 powers");
    ++cur.i;
    int gen = cur.integer();
    int exp = cur.eat('^') ? cur.integer() : 1;
    if (gen != 1 && gen != 2) throw parse_error("form tail uses s1 and s2 only");
    if (exp == 0) throw parse_error("zero exponent in form tail");
    powers.emplace_back(gen, exp);
  }

  MurasugiForm f;
  f.n = n;
  if (powers.empty()) {
    f.cls = MurasugiForm::Power;
    f.m = 0;
  } else if (powers.size() == 1 && powers[0].first == 2) {
    f.cls = MurasugiForm::Power;
    f.m = powers[0].second;
  } else if (powers.size() == 2 && powers[0].first == 1 && powers[0].second < 0 &&
             powers[1] == std::pair{2, -1}) {
    f.cls = MurasugiForm::Special;
    f.m = powers[0].second;
  } else {
    f.cls = MurasugiForm::Alt;
    if (powers.size() % 2) throw parse_error("Alt form needs s1/s2 pairs");
    for (size_t i = 0; i < powers.size(); i += 2) {
      if (powers[i].first != 1 || powers[i + 1].first != 2)
        throw parse_error("Alt form alternates s1 then s2");
      if (powers[i].second <= 0 || powers[i + 1].second >= 0)
        throw parse_error("Alt form needs positive s1 and negative s2 powers");
      f.pairs.emplace_back(powers[i].second, -powers[i + 1].second);
    }
  }
  f.validate();
  return f;
}

/// Input dispatcher for the CLI: `braid:...`, `pd:...`, `form:...`, or a bare
/// string tried as a braid word first and a PD code second.
inline LinkDiagram parse_input(const std::string& text) {
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string tag = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (tag == "braid") return closure(parse_braid(body));
    if (tag == "pd") return parse_pd(body);
    if (tag == "form") return closure(parse_form(body).to_word());
    throw parse_error("unknown input tag `" + tag + "`");
  }
  try {
    return closure(parse_braid(text));
  } catch (const parse_error&) {
    return parse_pd(text);
  }
}

} // namespace khw

#include "qpa/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qpa {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

TextFile TextFile::parse(const std::string& content) {
  TextFile tf;
  size_t pos = 0;
  auto skip_ws_comments = [&] {
    while (pos < content.size()) {
      if (isspace(static_cast<unsigned char>(content[pos]))) {
        ++pos;
      } else if (content[pos] == '#') {
        while (pos < content.size() && content[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };
  auto read_string = [&]() -> std::string {
    if (content[pos] != '"') fail(Errc::ParseError, "expected a quoted string");
    ++pos;
    std::string out;
    while (pos < content.size() && content[pos] != '"') out.push_back(content[pos++]);
    if (pos == content.size()) fail(Errc::ParseError, "unterminated string");
    ++pos;
    return out;
  };
  while (true) {
    skip_ws_comments();
    if (pos >= content.size()) break;
    std::string key;
    while (pos < content.size() &&
           (isalnum(static_cast<unsigned char>(content[pos])) || content[pos] == '_'))
      key.push_back(content[pos++]);
    if (key.empty()) fail(Errc::ParseError, "expected a key");
    skip_ws_comments();
    if (pos >= content.size() || content[pos] != '=')
      fail(Errc::ParseError, "expected '=' after key " + key);
    ++pos;
    skip_ws_comments();
    if (pos >= content.size()) fail(Errc::ParseError, "missing value for key " + key);
    if (content[pos] == '"') {
      tf.values_[key] = read_string();
    } else if (content[pos] == '[') {
      ++pos;
      std::vector<std::string> items;
      while (true) {
        skip_ws_comments();
        if (pos >= content.size()) fail(Errc::ParseError, "unterminated array for " + key);
        if (content[pos] == ']') {
          ++pos;
          break;
        }
        if (content[pos] == ',') {
          ++pos;
          continue;
        }
        items.push_back(read_string());
      }
      tf.values_[key] = items;
    } else {
      std::string tok;
      while (pos < content.size() && !isspace(static_cast<unsigned char>(content[pos])) &&
             content[pos] != '#')
        tok.push_back(content[pos++]);
      try {
        tf.values_[key] = static_cast<long>(std::stol(tok));
      } catch (...) {
        fail(Errc::ParseError, "value for " + key + " is not an integer: " + tok);
      }
    }
  }
  return tf;
}

TextFile TextFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

long TextFile::get_int(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end() || !std::holds_alternative<long>(it->second))
    fail(Errc::ParseError, "missing integer key " + key);
  return std::get<long>(it->second);
}

std::string TextFile::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end() || !std::holds_alternative<std::string>(it->second))
    fail(Errc::ParseError, "missing string key " + key);
  return std::get<std::string>(it->second);
}

std::vector<std::string> TextFile::get_list(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end() || !std::holds_alternative<std::vector<std::string>>(it->second))
    fail(Errc::ParseError, "missing list key " + key);
  return std::get<std::vector<std::string>>(it->second);
}

Scalar parse_scalar(const std::string& text, long conductor) {
  // sum of terms: [+|-] [rational] [*] [z[^exp]]
  Scalar acc = Scalar::zero();
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) fail(Errc::ParseError, "empty scalar literal");
  bool first = true;
  while (pos < text.size()) {
    skip();
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = (text[pos] == '-') ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail(Errc::ParseError, "expected '+' or '-' in scalar: " + text);
    }
    first = false;
    Rational coef(sign);
    bool have_num = false;
    if (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() &&
             (isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      Rational q(text.substr(start, pos - start));
      q.canonicalize();
      coef *= q;
      have_num = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    long exp = 0;
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        exp = std::stol(text.substr(start, pos - start));
      }
    } else if (!have_num) {
      fail(Errc::ParseError, "expected a rational or z-term in scalar: " + text);
    }
    acc += Scalar(coef) * Cyclotomic::root_power(conductor, exp);
    skip();
  }
  return acc;
}

GroupSpec parse_group_file(const std::string& path) {
  TextFile tf = TextFile::load(path);
  GroupSpec out;
  out.degree = static_cast<int>(tf.get_int("degree"));
  for (const auto& s : tf.get_list("generators"))
    out.generators.push_back(Perm::parse_cycles(s, out.degree));
  return out;
}

FactorizationSpec parse_factorization_file(const std::string& path) {
  TextFile tf = TextFile::load(path);
  FactorizationSpec out;
  out.degree = static_cast<int>(tf.get_int("degree"));
  auto parse_all = [&](const std::string& key) {
    std::vector<Perm> v;
    for (const auto& s : tf.get_list(key)) v.push_back(Perm::parse_cycles(s, out.degree));
    return v;
  };
  if (tf.has("group")) out.group = parse_all("group");
  out.f = parse_all("F");
  out.gamma = parse_all("Gamma");
  return out;
}

MatchedPair matched_pair_from_spec(const FactorizationSpec& spec, std::size_t cap) {
  PermGroup f = PermGroup::closure(spec.degree, spec.f, cap);
  PermGroup gamma = PermGroup::closure(spec.degree, spec.gamma, cap);
  std::vector<Perm> ggens = spec.group;
  if (ggens.empty()) {
    ggens = spec.f;
    ggens.insert(ggens.end(), spec.gamma.begin(), spec.gamma.end());
  }
  PermGroup g = PermGroup::closure(spec.degree, ggens, cap);
  return derive_matched_pair(g, f, gamma);
}

namespace {

// entry "a | b | c -> scalar" split helper
std::vector<std::string> split_entry(const std::string& s, size_t parts) {
  auto arrow = s.find("->");
  if (arrow == std::string::npos) fail(Errc::ParseError, "missing '->' in entry: " + s);
  std::string lhs = s.substr(0, arrow);
  std::string rhs = strip(s.substr(arrow + 2));
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    auto bar = lhs.find('|', start);
    if (bar == std::string::npos) {
      out.push_back(strip(lhs.substr(start)));
      break;
    }
    out.push_back(strip(lhs.substr(start, bar - start)));
    start = bar + 1;
  }
  if (out.size() != parts) fail(Errc::ParseError, "wrong arity in entry: " + s);
  out.push_back(rhs);
  return out;
}

}  // namespace

CocyclePair parse_cocycle_file(const std::string& path, const MatchedPair& mp) {
  TextFile tf = TextFile::load(path);
  long conductor = tf.has("conductor") ? tf.get_int("conductor") : 1;
  CocyclePair c = CocyclePair::trivial(mp.Gamma.order(), mp.F.order());
  if (tf.has("sigma")) {
    for (const auto& s : tf.get_list("sigma")) {
      auto p = split_entry(s, 3);
      int g = mp.Gamma.index_of(Perm::parse_cycles(p[0], mp.Gamma.degree()));
      int x = mp.F.index_of(Perm::parse_cycles(p[1], mp.F.degree()));
      int y = mp.F.index_of(Perm::parse_cycles(p[2], mp.F.degree()));
      if (g < 0 || x < 0 || y < 0) fail(Errc::ParseError, "sigma entry outside the groups: " + s);
      c.sigma[g][x][y] = parse_scalar(p[3], conductor);
    }
  }
  if (tf.has("tau")) {
    for (const auto& s : tf.get_list("tau")) {
      auto p = split_entry(s, 3);
      int x = mp.F.index_of(Perm::parse_cycles(p[0], mp.F.degree()));
      int a = mp.Gamma.index_of(Perm::parse_cycles(p[1], mp.Gamma.degree()));
      int b = mp.Gamma.index_of(Perm::parse_cycles(p[2], mp.Gamma.degree()));
      if (x < 0 || a < 0 || b < 0) fail(Errc::ParseError, "tau entry outside the groups: " + s);
      c.tau[x][a][b] = parse_scalar(p[3], conductor);
    }
  }
  return c;
}

Bicharacter parse_bicharacter_file(const std::string& path, std::size_t cap) {
  TextFile tf = TextFile::load(path);
  int degree = static_cast<int>(tf.get_int("degree"));
  long conductor = tf.has("conductor") ? tf.get_int("conductor") : 1;
  std::vector<Perm> gens;
  for (const auto& s : tf.get_list("Gamma")) gens.push_back(Perm::parse_cycles(s, degree));
  PermGroup gamma = PermGroup::closure(degree, gens, cap);
  std::vector<std::vector<Scalar>> table(gamma.order(),
                                         std::vector<Scalar>(gamma.order(), Scalar::one()));
  if (tf.has("values")) {
    for (const auto& s : tf.get_list("values")) {
      auto p = split_entry(s, 2);
      int a = gamma.index_of(Perm::parse_cycles(p[0], degree));
      int b = gamma.index_of(Perm::parse_cycles(p[1], degree));
      if (a < 0 || b < 0) fail(Errc::ParseError, "bicharacter entry outside the group: " + s);
      table[a][b] = parse_scalar(p[2], conductor);
    }
  }
  return make_bicharacter(gamma, std::move(table));
}

}  // namespace qpa

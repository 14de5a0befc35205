#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qpa/builders.hpp"

namespace qpa {

/// Minimal structured text reader for the fixture files: `key = value` lines
/// with integer, quoted-string, or string-array values (arrays may span
/// lines); `#` starts a comment.
class TextFile {
 public:
  static TextFile parse(const std::string& content);
  static TextFile load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  long get_int(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;

 private:
  std::map<std::string, std::variant<long, std::string, std::vector<std::string>>> values_;
};

/// scalar literal: sum of terms `[+-] [p/q] [* ] [z[^k]]` with z the primitive
/// conductor-th root of unity
Scalar parse_scalar(const std::string& text, long conductor);

struct GroupSpec {
  int degree = 0;
  std::vector<Perm> generators;
};
GroupSpec parse_group_file(const std::string& path);

struct FactorizationSpec {
  int degree = 0;
  std::vector<Perm> group;  // empty: closure of F and Gamma
  std::vector<Perm> f;
  std::vector<Perm> gamma;
};
FactorizationSpec parse_factorization_file(const std::string& path);

MatchedPair matched_pair_from_spec(const FactorizationSpec& spec, std::size_t cap);

/// `sigma` entries "g | x | y -> scalar", `tau` entries "x | s | t -> scalar";
/// omitted entries default to 1
CocyclePair parse_cocycle_file(const std::string& path, const MatchedPair& mp);

/// `values` entries "a | b -> scalar"; omitted entries default to 1
Bicharacter parse_bicharacter_file(const std::string& path, std::size_t cap);

}  // namespace qpa

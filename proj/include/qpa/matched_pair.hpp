#pragma once

#include <string>
#include <vector>

#include "qpa/perm.hpp"

namespace qpa {

/// Mutual actions of an exact factorization G = F.Gamma, stored as full
/// lookup tables so every compatibility identity can be checked exhaustively
/// and the tables can go into reports. For g in Gamma, x in F the product
/// g*x factors uniquely as (g|>x)(g<|x) with g|>x in F and g<|x in Gamma.
struct MatchedPair {
  PermGroup G, F, Gamma;
  std::vector<std::vector<int>> left;   // left[g][x]  = index in F of g |> x
  std::vector<std::vector<int>> right;  // right[g][x] = index in Gamma of g <| x

  int act_left(int g, int x) const { return left[g][x]; }
  int act_right(int g, int x) const { return right[g][x]; }

  bool left_action_trivial() const;   // g |> x = x for all g, x
  bool right_action_trivial() const;  // g <| x = g for all g, x
  /// F-indices fixed by every g under |>
  std::vector<int> left_fixed_points() const;

  /// rows g, columns x, entries "g|>x | g<|x" in cycle notation
  std::string action_table_csv() const;
};

/// throws NotExactFactorization / CompatibilityFailure
MatchedPair derive_matched_pair(const PermGroup& G, const PermGroup& F, const PermGroup& Gamma);

enum class ActionSide {
  LeftOnF,      // Gamma acting on F via |>
  RightOnGamma  // F acting on Gamma via <|
};

struct OrbitData {
  std::vector<std::vector<int>> orbits;  // sorted element indices, rep = first
  std::vector<PermGroup> stabilizers;    // stabilizer of each orbit's representative
};
OrbitData orbits_and_stabilizers(const MatchedPair& mp, ActionSide side);

/// stabilizer of one point (an F-subgroup for RightOnGamma, a Gamma-subgroup
/// for LeftOnF)
PermGroup point_stabilizer(const MatchedPair& mp, ActionSide side, int point_index);

/// subgroups T of F with g |> T = T for all g
std::vector<PermGroup> stable_subgroups(const MatchedPair& mp, SubgroupFilter filter);

/// largest subgroup of F acting trivially on Gamma via <| (kernel of F -> Sym(Gamma))
PermGroup trivially_acting_kernel(const MatchedPair& mp);

/// restriction to F' (computes Gamma' = {g : g |> F' = F'})
MatchedPair restrict_matched_pair(const MatchedPair& mp, const PermGroup& f_prime);

}  // namespace qpa

#pragma once

#include "qpa/hopf.hpp"
#include "qpa/matched_pair.hpp"

namespace qpa {

/// k^G with basis {e_g} ordered like G.elements()
struct FunctionAlgebra {
  HopfPtr H;
  PermGroup G;
};

/// kG with basis G.elements()
struct GroupAlgebra {
  HopfPtr H;
  PermGroup G;
};

FunctionAlgebra build_function_algebra(const PermGroup& g);
GroupAlgebra build_group_algebra(const PermGroup& g);

/// Normalized cocycle tables for a bicrossed product. Compatibility is not
/// encoded symbolically: a bad pair is caught by the full axiom verification
/// in build_bicrossed.
struct CocyclePair {
  std::vector<std::vector<std::vector<Scalar>>> sigma;  // sigma[g][x][y]
  std::vector<std::vector<std::vector<Scalar>>> tau;    // tau[x][s][t]

  static CocyclePair trivial(std::size_t n_gamma, std::size_t n_f);
  bool is_trivial() const;
};

/// k^Gamma #^tau_sigma kF on basis e_g # x, index g*|F| + x, together with
/// the canonical verified exact sequence k -> k^Gamma -> H -> kF -> k.
struct Bicrossed {
  HopfPtr H;
  MatchedPair mp;
  CocyclePair cocycles;
  bool split = false;
  FunctionAlgebra k_gamma;
  GroupAlgebra k_f;
  HopfMap iota;  // k^Gamma -> H
  HopfMap pi;    // H -> kF
  ExactSequenceReport sequence;

  int n_gamma() const { return static_cast<int>(mp.Gamma.order()); }
  int n_f() const { return static_cast<int>(mp.F.order()); }
  int index(int g, int x) const { return g * n_f() + x; }
  std::pair<int, int> unindex(int i) const { return {i / n_f(), i % n_f()}; }
  SparseVec embed_fn(int g) const;  // e_g # 1
  SparseVec lift(int x) const;      // 1 # x
};

/// throws IncompatibleCocycles when the axiom verification fails
Bicrossed build_bicrossed(const MatchedPair& mp, const CocyclePair& cocycles);
Bicrossed build_bicrossed_split(const MatchedPair& mp);

struct GrouplikeData {
  std::vector<SparseVec> elements;
  std::vector<std::vector<int>> table;  // table[i][j] = index of product
  bool closed_group = false;
};

/// Complete group-like list of a split bicrossed product: chi # x over
/// characters chi of Gamma and |>-fixed points x of F. Completeness rests on
/// homogeneity for the F-grading; every returned element is re-verified.
GrouplikeData grouplikes_split(const Bicrossed& b);

/// general verifier (no completeness claim); group table by closure
GrouplikeData group_of_grouplikes(const HopfData& h, const std::vector<SparseVec>& candidates);

struct DrinfeldDouble {
  HopfPtr D, Dstar;
  PermGroup G;
  FunctionAlgebra fun;  // k^G
  GroupAlgebra grp;     // kG
  HopfMap embed_fun;    // k^G -> D, e_g -> e_g (x) 1
  HopfMap embed_grp;    // kG  -> D, x   -> 1 (x) x
  HopfMap dstar_iota;   // k^G -> D*
  HopfMap dstar_pi;     // D*  -> kG
  ExactSequenceReport dstar_sequence;
  bool dstar_central = false;

  int n() const { return static_cast<int>(G.order()); }
  int index(int g, int x) const { return g * n() + x; }
  SparseVec dstar_lift(int y) const;  // sum_u f_{(y,u)} in D*
};

DrinfeldDouble build_drinfeld_double(const PermGroup& g, std::size_t cap = kDefaultOrderCap);

struct Bicharacter {
  PermGroup Gamma;
  std::vector<std::vector<Scalar>> table;  // indexed by element
};

/// verifies multiplicativity in both arguments; throws NotBicharacter
Bicharacter make_bicharacter(const PermGroup& gamma, std::vector<std::vector<Scalar>> table);

/// Twisted group algebra k_sigma Gamma: plain associative algebra on basis
/// Gamma with a*b = sigma(a,b) ab. No coalgebra structure.
struct TwistedGroupAlgebra {
  PermGroup Gamma;
  int dim = 0;
  std::vector<std::vector<std::pair<int, Scalar>>> mult;  // monomial table
  bool commutative = false;
  std::vector<SparseVec> center;

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
};

/// throws NotAbelian; associativity verified exhaustively
TwistedGroupAlgebra build_twisted_group_algebra(const PermGroup& gamma, const Bicharacter& sigma);

}  // namespace qpa

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/builders.hpp"
#include "qpa/matched_pair.hpp"

using namespace qpa;

namespace {
Perm pc(const std::string& s, int n) { return Perm::parse_cycles(s, n); }

PermGroup s3() { return PermGroup::closure(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)}); }

MatchedPair sn_pair(int n) {
  std::string cyc = "(";
  for (int i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
  PermGroup gamma = PermGroup::closure(n, {pc(cyc, n)});
  std::vector<Perm> fgens;
  for (int i = 1; i < n - 1; ++i)
    fgens.push_back(pc("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n));
  PermGroup f = PermGroup::closure(n, fgens);
  std::vector<Perm> ggens = fgens;
  ggens.push_back(pc(cyc, n));
  return derive_matched_pair(PermGroup::closure(n, ggens), f, gamma);
}
}  // namespace

TEST_CASE("function algebra of S_3 passes all axioms, commutative") {
  FunctionAlgebra h = build_function_algebra(s3());
  HopfReport rep = verify_hopf(*h.H);
  CHECK(rep.all_axioms());
  CHECK(rep.s_squared_identity);
  CHECK(rep.commutative);
  CHECK_FALSE(rep.cocommutative);
  // S(e_g) = e_{g^{-1}}
  for (size_t i = 0; i < h.G.order(); ++i)
    CHECK(h.H->antipode[i] == SparseVec::unit(h.G.inverse_of(static_cast<int>(i))));
}

TEST_CASE("group algebra of S_3 passes all axioms, cocommutative") {
  GroupAlgebra h = build_group_algebra(s3());
  HopfReport rep = verify_hopf(*h.H);
  CHECK(rep.all_axioms());
  CHECK(rep.cocommutative);
  CHECK_FALSE(rep.commutative);
  for (size_t i = 0; i < h.G.order(); ++i)
    CHECK(h.H->antipode[i] == SparseVec::unit(h.G.inverse_of(static_cast<int>(i))));
}

TEST_CASE("bicrossed product k^{C_4} # kS_3 verifies with both flags false") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  HopfReport rep = verify_hopf(*b.H);
  CHECK(rep.all_axioms());
  CHECK(rep.s_squared_identity);
  CHECK_FALSE(rep.commutative);
  CHECK_FALSE(rep.cocommutative);
}

TEST_CASE("antipode solver agrees with the closed form on k^G and kG") {
  // drop the antipode and re-solve without a guess
  FunctionAlgebra fa = build_function_algebra(s3());
  HopfData h = *fa.H;
  h.antipode.clear();
  h.antipode.assign(h.dim, SparseVec{});
  auto s = solve_antipode(h);
  for (int i = 0; i < h.dim; ++i)
    CHECK(s[i] == SparseVec::unit(fa.G.inverse_of(i)));
  GroupAlgebra ga = build_group_algebra(PermGroup::closure(4, {pc("(1 2 3 4)", 4)}));
  HopfData h2 = *ga.H;
  h2.antipode.assign(h2.dim, SparseVec{});
  auto s2 = solve_antipode(h2);
  for (int i = 0; i < h2.dim; ++i)
    CHECK(s2[i] == SparseVec::unit(ga.G.inverse_of(i)));
}

TEST_CASE("antipode solver without a guess on a bismash product") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  HopfData h = *b.H;
  auto expected = h.antipode;
  h.antipode.assign(h.dim, SparseVec{});
  auto s = solve_antipode(h);
  for (int i = 0; i < h.dim; ++i) CHECK(s[i] == expected[i]);
}

TEST_CASE("solver rejects a bialgebra without antipode") {
  // the monoid bialgebra of {1, a} with a^2 = a: Delta(a) = a (x) a
  HopfData h;
  h.dim = 2;
  h.labels = {"1", "a"};
  h.mult.assign(2, std::vector<SparseVec>(2));
  h.mult[0][0] = SparseVec::unit(0);
  h.mult[0][1] = SparseVec::unit(1);
  h.mult[1][0] = SparseVec::unit(1);
  h.mult[1][1] = SparseVec::unit(1);
  h.unit = SparseVec::unit(0);
  h.comult.assign(2, {});
  h.comult[0].push_back({0, 0, Scalar::one()});
  h.comult[1].push_back({1, 1, Scalar::one()});
  h.counit = {Scalar::one(), Scalar::one()};
  h.antipode.assign(2, SparseVec{});
  CHECK_THROWS_AS(solve_antipode(h), Error);
  try {
    solve_antipode(h);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoAntipode);
  }
}

TEST_CASE("dual of k^G is kG") {
  FunctionAlgebra fa = build_function_algebra(s3());
  GroupAlgebra ga = build_group_algebra(s3());
  HopfPtr d = dual_hopf(*fa.H);
  CHECK(structure_equal(*d, *ga.H));
}

TEST_CASE("dual applied twice returns the original structure constants") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  HopfPtr dd = dual_hopf(*dual_hopf(*b.H));
  CHECK(structure_equal(*dd, *b.H));
  DrinfeldDouble d = build_drinfeld_double(s3());
  HopfPtr ddd = dual_hopf(*dual_hopf(*d.D));
  CHECK(structure_equal(*ddd, *d.D));
}

TEST_CASE("dual of a verified algebra passes verification") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  HopfPtr d = dual_hopf(*b.H);
  HopfReport rep = verify_hopf(*d);
  CHECK(rep.all_axioms());
  CHECK(rep.s_squared_identity);
}

TEST_CASE("coinvariants of the canonical projection have dimension |Gamma|") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  auto coinv = coinvariants(*b.H, b.pi);
  CHECK(coinv.size() == b.mp.Gamma.order());
  // identity projection: coinvariants = span of the unit
  HopfMap id{b.H, b.H, {}};
  id.matrix.resize(b.H->dim);
  for (int i = 0; i < b.H->dim; ++i) id.matrix[i] = SparseVec::unit(i);
  auto only_unit = coinvariants(*b.H, id);
  CHECK(only_unit.size() == 1);
  EchelonBasis eb;
  eb.insert(b.H->unit);
  CHECK(eb.contains(only_unit[0]));
  // projection to the trivial Hopf algebra: everything is coinvariant
  FunctionAlgebra triv = build_function_algebra(PermGroup::trivial(1));
  HopfMap eps{b.H, triv.H, {}};
  eps.matrix.resize(b.H->dim);
  for (int i = 0; i < b.H->dim; ++i)
    eps.matrix[i] = SparseVec::unit(0, b.H->counit[i]);
  CHECK(coinvariants(*b.H, eps).size() == static_cast<size_t>(b.H->dim));
}

TEST_CASE("exact sequences for the bismash products") {
  Bicrossed b4 = build_bicrossed_split(sn_pair(4));
  CHECK(b4.sequence.all());
  CHECK(b4.mp.Gamma.order() * b4.mp.F.order() == 24);
  Bicrossed b5 = build_bicrossed_split(sn_pair(5));
  CHECK(b5.sequence.all());
  CHECK(b5.H->dim == 120);
}

TEST_CASE("span growth") {
  FunctionAlgebra fa = build_function_algebra(s3());
  // the unit alone spans a line
  auto one = subalgebra_span_growth(*fa.H, {});
  CHECK(one.size() == 1);
  // all the delta idempotents span everything
  std::vector<SparseVec> seed;
  for (int i = 0; i < fa.H->dim; ++i) seed.push_back(SparseVec::unit(i));
  CHECK(subalgebra_span_growth(*fa.H, seed).size() == 6);
  // a single transposition inside kS_3 generates a 2-dimensional subalgebra
  GroupAlgebra ga = build_group_algebra(s3());
  int t = ga.G.index_of(pc("(1 2)", 3));
  CHECK(subalgebra_span_growth(*ga.H, {SparseVec::unit(t)}).size() == 2);
}

TEST_CASE("closure property of span growth output") {
  GroupAlgebra ga = build_group_algebra(s3());
  int t = ga.G.index_of(pc("(1 2 3)", 3));
  auto basis = subalgebra_span_growth(*ga.H, {SparseVec::unit(t)});
  EchelonBasis eb;
  for (const auto& v : basis) eb.insert(v);
  for (const auto& u : basis)
    for (const auto& v : basis) CHECK(eb.contains(ga.H->multiply(u, v)));
}

TEST_CASE("group-likes of a split bicrossed product") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  GrouplikeData gl = grouplikes_split(b);
  CHECK(gl.elements.size() == 8);
  CHECK(gl.closed_group);
  for (const auto& g : gl.elements) CHECK(is_grouplike(*b.H, g));
  // linear independence
  CHECK(rank_of(gl.elements) == 8);
  // the group is D_4
  PermGroup d4 = PermGroup::closure(4, {pc("(1 2 3 4)", 4), pc("(1 3)", 4)});
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) t[i][j] = d4.multiply(i, j);
  CHECK(tables_isomorphic(gl.table, t));
}

TEST_CASE("group-like count for trivial actions is |Gamma^| * |F|") {
  PermGroup f = PermGroup::closure(5, {pc("(1 2)", 5)});
  PermGroup gamma = PermGroup::closure(5, {pc("(3 4 5)", 5)});
  PermGroup g = PermGroup::closure(5, {pc("(1 2)", 5), pc("(3 4 5)", 5)});
  Bicrossed b = build_bicrossed_split(derive_matched_pair(g, f, gamma));
  GrouplikeData gl = grouplikes_split(b);
  CHECK(gl.elements.size() == 3 * 2);
}

TEST_CASE("grouplikes_split refuses twisted products") {
  // nontrivial tau over the direct product Z_2 x Z_2 makes the call invalid
  PermGroup f = PermGroup::closure(4, {pc("(1 2)", 4)});
  PermGroup gamma = PermGroup::closure(4, {pc("(3 4)", 4)});
  PermGroup g = PermGroup::closure(4, {pc("(1 2)", 4), pc("(3 4)", 4)});
  MatchedPair mp = derive_matched_pair(g, f, gamma);
  CocyclePair c = CocyclePair::trivial(2, 2);
  c.sigma[1][1][1] = Scalar(Rational(-1));  // sigma_g(x,x) = -1 at the nontrivial pair
  Bicrossed b = build_bicrossed(mp, c);
  CHECK_FALSE(b.split);
  CHECK_THROWS_AS(grouplikes_split(b), Error);
}

TEST_CASE("extraction of sub-Hopf structure") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  GrouplikeData gl = grouplikes_split(b);
  HopfPtr sub = extract_sub_hopf(*b.H, gl.elements);
  HopfReport rep = verify_hopf(*sub);
  CHECK(rep.all_axioms());
  CHECK(rep.cocommutative);  // group algebra of G(H)
  CHECK(sub->dim == 8);
}

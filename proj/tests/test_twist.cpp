#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/twist.hpp"

using namespace qpa;

namespace {
Perm pc(const std::string& s, int n) { return Perm::parse_cycles(s, n); }

PermGroup s4() { return PermGroup::closure(4, {pc("(1 2)", 4), pc("(1 2 3 4)", 4)}); }

// Klein four-group inside S_4 and its triangular bicharacter model on the
// abstract Z_2 x Z_2 = <(1 2), (3 4)>
PermGroup klein_in_s4() {
  return PermGroup::closure(4, {pc("(1 2)(3 4)", 4), pc("(1 3)(2 4)", 4)});
}

Bicharacter triangular_bicharacter() {
  PermGroup v4 = PermGroup::closure(4, {pc("(1 2)", 4), pc("(3 4)", 4)});
  int t1 = v4.index_of(pc("(1 2)", 4));
  int t2 = v4.index_of(pc("(3 4)", 4));
  int t12 = v4.multiply(t1, t2);
  std::vector<std::vector<Scalar>> tab(4, std::vector<Scalar>(4, Scalar::one()));
  tab[t1][t2] = Scalar(Rational(-1));
  tab[t1][t12] = Scalar(Rational(-1));
  tab[t12][t2] = Scalar(Rational(-1));
  tab[t12][t12] = Scalar(Rational(-1));
  return make_bicharacter(v4, tab);
}

GroupAlgebra bichar_target() {
  return build_group_algebra(PermGroup::closure(4, {pc("(1 2)", 4), pc("(3 4)", 4)}));
}
}  // namespace

TEST_CASE("trivial cocycle twists to the identical structure") {
  FunctionAlgebra fa = build_function_algebra(
      PermGroup::closure(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)}));
  CocycleForm sigma = trivial_cocycle(fa.H);
  HopfPtr t = doi_twist(*fa.H, sigma);
  CHECK(structure_equal(*t, *fa.H));
}

TEST_CASE("character projection onto the Klein four character group") {
  FunctionAlgebra fa = build_function_algebra(s4());
  GroupAlgebra target = bichar_target();
  HopfMap p = character_projection(fa, klein_in_s4(), target);
  CHECK(verify_hopf_map(p));
  CHECK(rank_of(p.matrix) == 4);
}

TEST_CASE("lifted Klein cocycle is a verified cocycle form") {
  FunctionAlgebra fa = build_function_algebra(s4());
  GroupAlgebra target = bichar_target();
  HopfMap p = character_projection(fa, klein_in_s4(), target);
  CocycleForm sigma = lift_cocycle(fa.H, p, target, triangular_bicharacter());
  CHECK(sigma.table.size() == 24);
  // convolution inverse identity is checked internally; spot check symmetry
  // breaking: sigma is not symmetric
  bool symmetric = true;
  for (int i = 0; i < 24 && symmetric; ++i)
    for (int j = 0; j < 24; ++j)
      if (!(sigma.table[i][j] == sigma.table[j][i])) {
        symmetric = false;
        break;
      }
  CHECK_FALSE(symmetric);
}

TEST_CASE("twist of k^{S_4} by the lifted Klein cocycle is noncommutative of dim 24") {
  FunctionAlgebra fa = build_function_algebra(s4());
  GroupAlgebra target = bichar_target();
  HopfMap p = character_projection(fa, klein_in_s4(), target);
  CocycleForm sigma = lift_cocycle(fa.H, p, target, triangular_bicharacter());
  HopfPtr t = doi_twist(*fa.H, sigma);
  HopfReport rep = verify_hopf(*t);
  CHECK(rep.all_axioms());
  CHECK(rep.s_squared_identity);
  CHECK_FALSE(rep.commutative);
  CHECK(t->dim == 24);
  // the coalgebra is untouched
  for (int i = 0; i < t->dim; ++i) {
    CHECK(t->counit[i] == fa.H->counit[i]);
    CHECK(t->comult[i].size() == fa.H->comult[i].size());
  }
}

TEST_CASE("twisting by sigma then by its inverse restores the structure") {
  FunctionAlgebra fa = build_function_algebra(s4());
  GroupAlgebra target = bichar_target();
  HopfMap p = character_projection(fa, klein_in_s4(), target);
  CocycleForm sigma = lift_cocycle(fa.H, p, target, triangular_bicharacter());
  HopfPtr t = doi_twist(*fa.H, sigma);
  CocycleForm inv = make_cocycle_form(t, sigma.inverse_table);
  HopfPtr back = doi_twist(*t, inv);
  CHECK(structure_equal(*back, *fa.H));
}

TEST_CASE("sufficiency test on the Cayley certificate of k^{S_4}") {
  FunctionAlgebra fa = build_function_algebra(s4());
  MagicCert cay = cayley_magic(fa);
  GroupAlgebra target = bichar_target();
  HopfMap p = character_projection(fa, klein_in_s4(), target);
  CocycleForm sigma = lift_cocycle(fa.H, p, target, triangular_bicharacter());
  SuffTwistResult r = check_suff_twist(cay, sigma);
  // whatever the outcome of the delta-condition, a passing condition must
  // come with a verified full certificate for the twist
  if (r.holds) {
    REQUIRE(r.twisted.has_value());
    CHECK(r.twisted->is_full_certificate);
    CHECK(r.twisted->parent->dim == 24);
  } else {
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("sufficiency test accepts the trivial cocycle") {
  FunctionAlgebra fa = build_function_algebra(
      PermGroup::closure(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)}));
  MagicCert cay = cayley_magic(fa);
  SuffTwistResult r = check_suff_twist(cay, trivial_cocycle(fa.H));
  CHECK(r.holds);
  REQUIRE(r.twisted.has_value());
  CHECK(r.twisted->is_full_certificate);
  CHECK(structure_equal(*r.twisted_algebra, *fa.H));
}

TEST_CASE("a non-cocycle table is rejected") {
  FunctionAlgebra fa = build_function_algebra(
      PermGroup::closure(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)}));
  std::vector<std::vector<Scalar>> bad(6, std::vector<Scalar>(6, Scalar::zero()));
  CHECK_THROWS_AS(make_cocycle_form(fa.H, bad), Error);
}

TEST_CASE("twist of k^{Z_3 x Z_3} by the root-of-unity bicharacter has a trivial center") {
  PermGroup g33 = PermGroup::closure(6, {pc("(1 2 3)", 6), pc("(4 5 6)", 6)});
  FunctionAlgebra fa = build_function_algebra(g33);
  // bicharacter s((i,j),(t,l)) = zeta_3^{jt} on the abstract model
  PermGroup model = PermGroup::closure(6, {pc("(1 2 3)", 6), pc("(4 5 6)", 6)});
  Perm u = pc("(1 2 3)", 6), v = pc("(4 5 6)", 6);
  auto exps = [&](const Perm& p) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Perm q = Perm::identity(6);
        for (int k = 0; k < i; ++k) q = q * u;
        for (int k = 0; k < j; ++k) q = q * v;
        if (q == p) return std::make_pair(i, j);
      }
    return std::make_pair(-1, -1);
  };
  std::vector<std::vector<Scalar>> tab(9, std::vector<Scalar>(9));
  for (size_t a = 0; a < 9; ++a)
    for (size_t b = 0; b < 9; ++b) {
      auto [i, j] = exps(model.element(a));
      auto [ti, tj] = exps(model.element(b));
      (void)i;
      (void)tj;
      tab[a][b] = Cyclotomic::root_power(3, j * ti);
    }
  Bicharacter s = make_bicharacter(model, tab);
  GroupAlgebra target = build_group_algebra(model);
  HopfMap p = character_projection(fa, g33, target);
  CocycleForm sigma = lift_cocycle(fa.H, p, target, s);
  HopfPtr t = doi_twist(*fa.H, sigma);
  CHECK(verify_hopf(*t).all_axioms());
  CHECK_FALSE(verify_hopf(*t).commutative);
  // center of the twisted algebra: solve z b = b z over the basis
  std::vector<SparseVec> rows;
  for (int b2 = 0; b2 < t->dim; ++b2) {
    std::map<int, SparseVec> byk;
    for (int a = 0; a < t->dim; ++a) {
      for (const auto& [k, c] : t->mult[a][b2].terms) byk[k] += SparseVec::unit(a, c);
      for (const auto& [k, c] : t->mult[b2][a].terms) byk[k] += SparseVec::unit(a, -c);
    }
    for (auto& [k, row] : byk)
      if (!row.is_zero()) rows.push_back(std::move(row));
  }
  CHECK(kernel_basis(rows, t->dim).size() == 1);
}

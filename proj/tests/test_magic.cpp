#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/magic.hpp"

using namespace qpa;

namespace {
Perm pc(const std::string& s, int n) { return Perm::parse_cycles(s, n); }
PermGroup s3() { return PermGroup::closure(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)}); }
}  // namespace

TEST_CASE("identity-style matrix is magic and generates the unit line") {
  FunctionAlgebra fa = build_function_algebra(s3());
  std::vector<std::vector<SparseVec>> entries(3, std::vector<SparseVec>(3));
  for (int i = 0; i < 3; ++i) entries[i][i] = fa.H->unit;
  MagicCert c = verify_magic(fa.H, entries);
  CHECK(c.generated_dim == 1);
  CHECK_FALSE(c.is_full_certificate);
}

TEST_CASE("row sum violations are reported with a witness") {
  FunctionAlgebra fa = build_function_algebra(s3());
  std::vector<std::vector<SparseVec>> entries(2, std::vector<SparseVec>(2));
  entries[0][0] = fa.H->unit;
  entries[1][1] = fa.H->unit;
  entries[0][1] = SparseVec::unit(0);  // breaks the row sum
  try {
    verify_magic(fa.H, entries);
    FAIL("expected RelationFailure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RelationFailure);
  }
}

TEST_CASE("Cayley certificate for k^{S_3} has degree 6 and is full") {
  FunctionAlgebra fa = build_function_algebra(s3());
  MagicCert c = cayley_magic(fa);
  CHECK(c.size == 6);
  CHECK(c.generated_dim == 6);
  CHECK(c.is_full_certificate);
}

TEST_CASE("Cayley certificates at tiny orders") {
  MagicCert c1 = cayley_magic(build_function_algebra(PermGroup::trivial(1)));
  CHECK(c1.size == 1);
  FunctionAlgebra z2 = build_function_algebra(PermGroup::closure(2, {pc("(1 2)", 2)}));
  MagicCert c2 = cayley_magic(z2);
  CHECK(c2.size == 2);
  CHECK(c2.is_full_certificate);
}

TEST_CASE("Fourier certificate facts") {
  GroupAlgebra ga = build_group_algebra(s3());
  SUBCASE("the identity element gives the 1x1 unit matrix") {
    MagicCert c = fourier_magic(ga, Perm::identity(3));
    CHECK(c.size == 1);
    CHECK(c.entries[0][0] == ga.H->unit);
  }
  SUBCASE("an order-2 element gives the (1 +- g)/2 entries") {
    Perm g = pc("(1 2)", 3);
    MagicCert c = fourier_magic(ga, g);
    CHECK(c.size == 2);
    Rational half(1, 2);
    SparseVec plus = ga.H->unit.scaled(Scalar(half)) +
                     SparseVec::unit(ga.G.index_of(g), Scalar(half));
    CHECK(c.entries[0][0] == plus);
    CHECK(c.generated_dim == 2);
  }
  SUBCASE("an order-3 element generates the 3-dimensional cyclic subalgebra") {
    MagicCert c = fourier_magic(ga, pc("(1 2 3)", 3));
    CHECK(c.size == 3);
    CHECK(c.generated_dim == 3);
    CHECK_FALSE(c.is_full_certificate);
  }
}

TEST_CASE("Fourier row and column sums telescope exactly") {
  GroupAlgebra ga = build_group_algebra(PermGroup::closure(5, {pc("(1 2 3 4 5)", 5)}));
  MagicCert c = fourier_magic(ga, pc("(1 2 3 4 5)", 5));
  CHECK(c.size == 5);
  CHECK(c.is_full_certificate);
}

TEST_CASE("block composition over kS_3 reaches the full algebra at degree 5") {
  GroupAlgebra ga = build_group_algebra(s3());
  MagicCert a = fourier_magic(ga, pc("(1 2 3)", 3));
  MagicCert b = fourier_magic(ga, pc("(1 2)", 3));
  MagicCert c = block_compose({a, b});
  CHECK(c.size == 5);
  CHECK(c.generated_dim == 6);
  CHECK(c.is_full_certificate);
  // degree additivity and monotone generation
  CHECK(c.size == a.size + b.size);
  CHECK(c.generated_dim >= a.generated_dim);
  CHECK(c.generated_dim >= b.generated_dim);
  // single block composition is the identity operation
  MagicCert single = block_compose({a});
  CHECK(single.size == a.size);
  CHECK(single.generated_dim == a.generated_dim);
}

TEST_CASE("padding a full certificate with a trivial block stays magic") {
  FunctionAlgebra fa = build_function_algebra(s3());
  MagicCert cay = cayley_magic(fa);
  std::vector<std::vector<SparseVec>> unitblock(1, std::vector<SparseVec>(1));
  unitblock[0][0] = fa.H->unit;
  MagicCert triv = verify_magic(fa.H, unitblock);
  MagicCert c = block_compose({cay, triv});
  CHECK(c.size == 7);
  CHECK(c.is_full_certificate);
}

TEST_CASE("entrywise antipode of a certificate satisfies the relations") {
  FunctionAlgebra fa = build_function_algebra(s3());
  MagicCert cay = cayley_magic(fa);
  std::vector<std::vector<SparseVec>> st(cay.size, std::vector<SparseVec>(cay.size));
  for (int i = 0; i < cay.size; ++i)
    for (int j = 0; j < cay.size; ++j) st[i][j] = fa.H->apply_antipode(cay.entries[i][j]);
  MagicCert c = verify_magic(fa.H, st);
  CHECK(c.is_full_certificate);
}

TEST_CASE("double certificate for D(Z_2)") {
  PermGroup z2 = PermGroup::closure(2, {pc("(1 2)", 2)});
  DrinfeldDouble d = build_drinfeld_double(z2);
  MagicCert cg = fourier_magic(d.grp, pc("(1 2)", 2));
  MagicCert cf = cayley_magic(d.fun);
  MagicCert c = double_magic(d, cg, cf);
  CHECK(c.size == 4);
  CHECK(c.is_full_certificate);
  CHECK(c.parent->dim == 4);
}

TEST_CASE("double certificate for D(S_3) at degree 11") {
  DrinfeldDouble d = build_drinfeld_double(s3());
  MagicCert f1 = fourier_magic(d.grp, pc("(1 2 3)", 3));
  MagicCert f2 = fourier_magic(d.grp, pc("(1 2)", 3));
  MagicCert cg = block_compose({f1, f2});
  CHECK(cg.is_full_certificate);  // generates kS_3
  MagicCert cf = cayley_magic(d.fun);
  MagicCert c = double_magic(d, cg, cf);
  CHECK(c.size == 11);
  CHECK(c.generated_dim == 36);
  CHECK(c.is_full_certificate);
  CHECK(c.size <= 6 * (1 + 6));
  CHECK(c.degree_bound_line.find("42") != std::string::npos);
}

TEST_CASE("coideal certificate from the group-like span") {
  // degree-2 certificate over kC_2 through its only nontrivial coideal
  GroupAlgebra ga = build_group_algebra(PermGroup::closure(2, {pc("(1 2)", 2)}));
  std::vector<SparseVec> basis = {SparseVec::unit(0), SparseVec::unit(1)};
  CoidealSub l = check_coideal_subalgebra(ga.H, basis, CoidealSide::Left);
  MagicCert c = coideal_certificate(l, 2, "kC_2 as its own coideal");
  CHECK(c.size == 2);
  CHECK(c.is_full_certificate);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/certify.hpp"
#include "qpa/textio.hpp"

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

MatchedPair transposed_pair(int n) {
  MatchedPair mp = sn_pair(n);
  return derive_matched_pair(mp.G, mp.Gamma, mp.F);
}

Bicrossed kac_paljutkin() {
  PermGroup f = PermGroup::closure(4, {pc("(1 2)(3 4)", 4), pc("(1 3)(2 4)", 4)});
  PermGroup gamma = PermGroup::closure(4, {pc("(1 3)", 4)});
  PermGroup g = PermGroup::closure(4, {pc("(1 2 3 4)", 4), pc("(1 3)", 4)});
  MatchedPair mp = derive_matched_pair(g, f, gamma);
  CocyclePair c = CocyclePair::trivial(2, 4);
  int s = 1;  // the nontrivial Gamma element
  int a = mp.F.index_of(pc("(1 4)(2 3)", 4));
  int b2 = mp.F.index_of(pc("(1 3)(2 4)", 4));
  int ab = mp.F.index_of(pc("(1 2)(3 4)", 4));
  Scalar m1{Rational(-1)};
  c.sigma[s][a][ab] = m1;
  c.sigma[s][a][b2] = m1;
  c.sigma[s][b2][ab] = m1;
  c.sigma[s][b2][b2] = m1;
  c.tau[b2][1][1] = m1;
  return build_bicrossed(mp, c);
}
}  // namespace

TEST_CASE("commutative route: k^{S_3} certified at degree 6") {
  FunctionAlgebra fa = build_function_algebra(s3());
  Verdict v = full_pipeline_plain(fa.H, 6);
  CHECK(v.status == VerdictStatus::QPA_certified);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->size == 6);
  CHECK(v.certificate->is_full_certificate);
}

TEST_CASE("cocommutative route: kS_3 certified by fourier blocks at degree 5") {
  GroupAlgebra ga = build_group_algebra(s3());
  Verdict v = full_pipeline_plain(ga.H, 6);
  CHECK(v.status == VerdictStatus::QPA_certified);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->size == 5);
  CHECK(v.certificate->is_full_certificate);
}

TEST_CASE("central certification of the dual double of S_3") {
  DrinfeldDouble d = build_drinfeld_double(s3());
  Verdict v = certify_central(central_presentation(d));
  CHECK(v.status == VerdictStatus::QPA_certified);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->is_full_certificate);
  CHECK(v.certificate->generated_dim == 36);
  // greedy generators of S_3 have orders 3 and 2: degree 6 + 18 + 12 = 36
  CHECK(v.certificate->size == 36);
  CHECK(*v.degree_bound == 36);
  CHECK(*v.degree_bound <= 6 * 6 * 6);
  CHECK(v.degree_derivation.find("216") != std::string::npos);
}

TEST_CASE("the 8-dimensional cocycle fixture is central-certified") {
  Bicrossed b = kac_paljutkin();
  HopfReport rep = verify_hopf(*b.H);
  CHECK(rep.all_axioms());
  CHECK(rep.s_squared_identity);
  CHECK_FALSE(rep.commutative);
  CHECK_FALSE(rep.cocommutative);
  CHECK(b.H->dim == 8);
  Verdict v = certify_central(central_presentation(b));
  CHECK(v.status == VerdictStatus::QPA_certified);
  CHECK(v.certificate->is_full_certificate);
  CHECK(*v.degree_bound <= 2 * 4 * 4);
}

TEST_CASE("split-abelian certification of k^{S_3} # kC_4") {
  Bicrossed b = build_bicrossed_split(transposed_pair(4));
  CHECK(b.H->dim == 24);
  CHECK_FALSE(b.mp.right_action_trivial());
  Verdict v = certify_split_abelian(b);
  CHECK(v.status == VerdictStatus::QPA_certified);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->generated_dim == 24);
  CHECK(*v.degree_bound <= 6L * 4 * 4);
}

TEST_CASE("split-abelian certifier reports the unmet criterion on k^{C_4} # kS_3") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  Verdict v = certify_split_abelian(b);
  CHECK(v.status == VerdictStatus::undecided);
  CHECK_FALSE(v.certificate.has_value());
}

TEST_CASE("tensor-product case is certified (trivial actions)") {
  PermGroup f = PermGroup::closure(5, {pc("(1 2)", 5)});
  PermGroup gamma = PermGroup::closure(5, {pc("(3 4 5)", 5)});
  PermGroup g = PermGroup::closure(5, {pc("(1 2)", 5), pc("(3 4 5)", 5)});
  Bicrossed b = build_bicrossed_split(derive_matched_pair(g, f, gamma));
  Verdict v = full_pipeline(b);
  CHECK(v.status == VerdictStatus::QPA_certified);
}

TEST_CASE("refute_prime on the 60-dimensional alternating case") {
  FactorizationSpec spec;
  spec.degree = 5;
  spec.f = {pc("(1 2 3)", 5), pc("(1 2)(3 4)", 5)};
  spec.gamma = {pc("(1 2 3 4 5)", 5)};
  MatchedPair mp = matched_pair_from_spec(spec, kDefaultOrderCap);
  Bicrossed b = build_bicrossed_split(mp);
  CHECK(b.H->dim == 60);
  Verdict v = refute_prime(b);
  CHECK(v.status == VerdictStatus::NOT_QPA_refuted);
  CHECK(v.all_log_entries_hold());
  CHECK(replay_refutation(b, v));
  CHECK_FALSE(v.certificate.has_value());
}

TEST_CASE("refute_prime is inconclusive when F is abelian") {
  // C_3 . C_2 direct product: the only stable subgroups generate F
  PermGroup f = PermGroup::closure(5, {pc("(1 2)", 5)});
  PermGroup gamma = PermGroup::closure(5, {pc("(3 4 5)", 5)});
  PermGroup g = PermGroup::closure(5, {pc("(1 2)", 5), pc("(3 4 5)", 5)});
  Bicrossed b = build_bicrossed_split(derive_matched_pair(g, f, gamma));
  Verdict v = refute_prime(b);
  CHECK(v.status == VerdictStatus::undecided);
}

TEST_CASE("the 24-dimensional refutation with replaying log") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  Verdict v = refute_c4_s3(b);
  CHECK(v.status == VerdictStatus::NOT_QPA_refuted);
  CHECK(v.all_log_entries_hold());
  CHECK(replay_refutation(b, v));
  REQUIRE(v.envelope.has_value());
  CHECK(v.envelope->dim == 8);
  CHECK(v.envelope->cocommutative);
  CHECK(v.envelope->grouplike_count == 8);
  // G(H) is D_4
  PermGroup d4 = PermGroup::closure(4, {pc("(1 2 3 4)", 4), pc("(1 3)", 4)});
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) t[i][j] = d4.multiply(i, j);
  CHECK(tables_isomorphic(v.envelope->grouplike_table, t));
}

TEST_CASE("the bespoke refuter rejects structurally different inputs") {
  Bicrossed wrong = build_bicrossed_split(transposed_pair(4));
  CHECK_THROWS_AS(refute_c4_s3(wrong), Error);
  try {
    refute_c4_s3(wrong);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::StructureMismatch);
  }
}

TEST_CASE("envelope of the 60-dimensional alternating case is proper") {
  FactorizationSpec spec;
  spec.degree = 5;
  spec.f = {pc("(1 2 3)", 5), pc("(1 2)(3 4)", 5)};
  spec.gamma = {pc("(1 2 3 4 5)", 5)};
  Bicrossed b = build_bicrossed_split(matched_pair_from_spec(spec, kDefaultOrderCap));
  Verdict v = envelope_split_prime(b);
  REQUIRE(v.envelope.has_value());
  CHECK(v.envelope->dim < 60);
  CHECK(v.envelope->dim == 10);  // C_5 times the join of the stable abelians
}

TEST_CASE("full pipeline on the 24-dimensional bismash refutes with envelope") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  Verdict v = full_pipeline(b);
  CHECK(v.status == VerdictStatus::NOT_QPA_refuted);
  REQUIRE(v.envelope.has_value());
  CHECK(v.envelope->dim == 8);
  CHECK(v.method == "refute_c4_s3");
  // a verdict never carries both a certificate and a refutation
  CHECK_FALSE(v.certificate.has_value());
}

TEST_CASE("compute_envelope dispatches the 24-dimensional case") {
  Bicrossed b = build_bicrossed_split(sn_pair(4));
  Verdict v = compute_envelope(b);
  REQUIRE(v.envelope.has_value());
  CHECK(v.envelope->dim == 8);
}

TEST_CASE("degree bound arithmetic is at least the certificate size") {
  DrinfeldDouble d = build_drinfeld_double(s3());
  Verdict v = certify_central(central_presentation(d));
  CHECK(*v.degree_bound >= v.certificate->size);
  Bicrossed b = build_bicrossed_split(transposed_pair(4));
  Verdict w = certify_split_abelian(b);
  CHECK(*w.degree_bound >= w.certificate->size);
}

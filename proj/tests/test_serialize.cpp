#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/magic.hpp"
#include "qpa/serialize.hpp"
#include "qpa/textio.hpp"

using namespace qpa;

namespace {
Perm pc(const std::string& s, int n) { return Perm::parse_cycles(s, n); }
PermGroup s3() { return PermGroup::closure(3, {pc("(1 2)", 3), pc("(1 2 3)", 3)}); }
}  // namespace

TEST_CASE("scalar round trip") {
  Scalar s = Cyclotomic::root_of_unity(12) * Cyclotomic(Rational(3, 7)) + Cyclotomic(Rational(1, 2));
  Json j = scalar_to_json(s);
  CHECK(scalar_from_json(j) == s);
  CHECK(scalar_from_json(scalar_to_json(Scalar::zero())).is_zero());
}

TEST_CASE("hopf algebra JSON round trip with verification") {
  FunctionAlgebra fa = build_function_algebra(s3());
  Json j = hopf_to_json(*fa.H);
  HopfPtr back = hopf_from_json(j);
  CHECK(structure_equal(*back, *fa.H));
  CHECK(back->labels == fa.H->labels);
  // byte-stable dumps
  CHECK(j.dump(2) == hopf_to_json(*hopf_from_json(j, false)).dump(2));
}

TEST_CASE("loading a corrupted algebra fails verification") {
  FunctionAlgebra fa = build_function_algebra(s3());
  Json j = hopf_to_json(*fa.H);
  j["counit"] = Json::array();  // destroy the counit
  CHECK_THROWS_AS(hopf_from_json(j), Error);
  CHECK_NOTHROW(hopf_from_json(j, false));  // trust mode skips the check
}

TEST_CASE("certificate JSON round trip re-verifies") {
  FunctionAlgebra fa = build_function_algebra(s3());
  MagicCert c = cayley_magic(fa);
  Json j = cert_to_json(c);
  MagicCert back = cert_from_json(j);
  CHECK(back.size == c.size);
  CHECK(back.generated_dim == c.generated_dim);
  CHECK(back.is_full_certificate);
  for (int i = 0; i < c.size; ++i)
    for (int k = 0; k < c.size; ++k) CHECK(back.entries[i][k] == c.entries[i][k]);
}

TEST_CASE("a tampered certificate fails the reload verification") {
  FunctionAlgebra fa = build_function_algebra(s3());
  MagicCert c = cayley_magic(fa);
  Json j = cert_to_json(c);
  j["entries"][0][2] = sparse_to_json(fa.H->unit);  // break an entry
  CHECK_THROWS_AS(cert_from_json(j), Error);
}

TEST_CASE("scalar text literals parse") {
  CHECK(parse_scalar("-1", 4) == Scalar(Rational(-1)));
  CHECK(parse_scalar("1/2", 1) == Scalar(Rational(1, 2)));
  CHECK(parse_scalar("z", 4) == Cyclotomic::root_of_unity(4));
  CHECK(parse_scalar("z^2", 8) == Cyclotomic::root_power(8, 2));
  CHECK(parse_scalar("1/2 + 1/2*z^2", 4) ==
        Scalar(Rational(1, 2)) + Scalar(Rational(1, 2)) * Cyclotomic::root_power(4, 2));
  CHECK(parse_scalar("-z + 1", 3) ==
        Scalar::one() - Cyclotomic::root_of_unity(3));
  CHECK_THROWS_AS(parse_scalar("", 4), Error);
  CHECK_THROWS_AS(parse_scalar("q", 4), Error);
}

TEST_CASE("structured text parser") {
  TextFile tf = TextFile::parse(
      "# comment\n"
      "degree = 5\n"
      "name = \"thing\"\n"
      "items = [\n  \"a\", # trailing comment\n  \"b\",\n]\n");
  CHECK(tf.get_int("degree") == 5);
  CHECK(tf.get_string("name") == "thing");
  CHECK(tf.get_list("items") == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(tf.get_int("absent"), Error);
}

TEST_CASE("verdict serialization carries log and envelope") {
  Verdict v;
  v.status = VerdictStatus::NOT_QPA_refuted;
  v.method = "refute_prime";
  v.refutation_log.push_back({"something holds", true, "witness"});
  EnvelopeInfo env;
  env.dim = 20;
  env.description = "sub";
  env.cocommutative = true;
  env.grouplike_count = 20;
  v.envelope = env;
  Json j = verdict_to_json(v);
  CHECK(j["status"] == "NOT_QPA_refuted");
  CHECK(j["refutation_log"][0]["holds"] == true);
  CHECK(j["envelope"]["dim"] == 20);
}

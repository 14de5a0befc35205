#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpa/cyclotomic.hpp"

using namespace qpa;

TEST_CASE("primitive roots at small orders") {
  CHECK(Cyclotomic::root_of_unity(1) == Cyclotomic::one());
  CHECK(Cyclotomic::root_of_unity(2) == Cyclotomic(Rational(-1)));
  // zeta_5: fifth power is 1, no smaller power is
  Cyclotomic z5 = Cyclotomic::root_of_unity(5);
  Cyclotomic p = z5;
  for (int k = 1; k < 5; ++k) {
    CHECK_FALSE(p == Cyclotomic::one());
    p = p * z5;
  }
  CHECK(p == Cyclotomic::one());
}

TEST_CASE("quartic and cubic identities") {
  Cyclotomic i = Cyclotomic::root_of_unity(4);
  CHECK(i * i == Cyclotomic(Rational(-1)));
  Cyclotomic w = Cyclotomic::root_of_unity(3);
  CHECK(w + w * w == Cyclotomic(Rational(-1)));
}

TEST_CASE("inverse of 1 + zeta_5 verified by multiplication") {
  Cyclotomic a = Cyclotomic::one() + Cyclotomic::root_of_unity(5);
  Cyclotomic v = a.inverse();
  CHECK(v * a == Cyclotomic::one());
}

TEST_CASE("inversion of zero is rejected") {
  CHECK_THROWS_AS(Cyclotomic::zero().inverse(), Error);
  try {
    Cyclotomic::zero().inverse();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InversionOfZero);
  }
}

TEST_CASE("vanishing sums of all n-th roots") {
  for (long n : {2, 3, 4, 5, 6, 8, 9, 12}) {
    Cyclotomic s = Cyclotomic::zero();
    for (long k = 0; k < n; ++k) s += Cyclotomic::root_power(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20240831);
  auto random_elem = [&](long n) {
    Cyclotomic v = Cyclotomic::zero();
    long phi = euler_phi(n);
    for (long k = 0; k < phi; ++k) {
      long num = static_cast<long>(rng() % 7) - 3;
      long den = 1 + static_cast<long>(rng() % 3);
      v += Cyclotomic(Rational(num, den)) * Cyclotomic::root_power(n, k);
    }
    return v;
  };
  for (long n : {4, 5, 6, 12}) {
    for (int trial = 0; trial < 8; ++trial) {
      Cyclotomic a = random_elem(n), b = random_elem(n), c = random_elem(n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::one());
    }
  }
}

TEST_CASE("mixed-conductor arithmetic promotes to the lcm") {
  Cyclotomic w = Cyclotomic::root_of_unity(3);
  Cyclotomic i = Cyclotomic::root_of_unity(4);
  Cyclotomic s = w * i;
  CHECK(s == Cyclotomic::root_power(12, 4 + 3));
  // promoting then demoting is the identity
  Cyclotomic wp = w.promoted(12);
  auto back = wp.demoted(3);
  REQUIRE(back.has_value());
  CHECK(*back == w);
  CHECK(back->conductor() == 3);
}

TEST_CASE("demotion only succeeds for genuine subfield members") {
  Cyclotomic z = Cyclotomic::root_of_unity(5);
  CHECK_FALSE(z.demoted(1).has_value());
  Cyclotomic sum = Cyclotomic::zero();
  for (int k = 0; k < 5; ++k) sum += Cyclotomic::root_power(5, k);
  CHECK(sum.demoted(1).has_value());  // = 0
  // zeta_6^3 = -1 demotes to the rationals
  CHECK(Cyclotomic::root_power(6, 3).demoted(1).has_value());
}

TEST_CASE("printing uses the reduced representation") {
  CHECK(Cyclotomic::root_power(6, 3).str() == "-1");
  CHECK(Cyclotomic::zero().str() == "0");
  CHECK(Cyclotomic(Rational(1, 2)).str() == "1/2");
  Cyclotomic v = Cyclotomic::one() + Cyclotomic::root_of_unity(4);
  CHECK(v.str() == "1 + z");
}

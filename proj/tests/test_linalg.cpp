#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpa/linalg.hpp"

using namespace qpa;

namespace {
SparseVec vec(std::initializer_list<long> xs) {
  SparseVec v;
  int i = 0;
  for (long x : xs) {
    if (x != 0) v.terms.emplace_back(i, Scalar(Rational(x)));
    ++i;
  }
  return v;
}
}  // namespace

TEST_CASE("echelon insert tracks rank and membership") {
  EchelonBasis eb;
  CHECK(eb.insert(vec({1, 2, 0})));
  CHECK(eb.insert(vec({0, 1, 1})));
  CHECK_FALSE(eb.insert(vec({1, 3, 1})));  // dependent
  CHECK(eb.rank() == 2);
  CHECK(eb.contains(vec({2, 5, 1})));
  CHECK_FALSE(eb.contains(vec({0, 0, 1})));
}

TEST_CASE("canonical basis is reduced echelon") {
  EchelonBasis eb;
  eb.insert(vec({2, 2, 4}));
  eb.insert(vec({1, 1, 3}));
  auto b = eb.basis();
  REQUIRE(b.size() == 2);
  CHECK(b[0].leading_index() == 0);
  CHECK(b[1].leading_index() == 2);
  // pivots are 1 and each row is zero at the other pivots
  CHECK(b[0].coeff(0) == Scalar(Rational(1)));
  CHECK(b[0].coeff(2).is_zero());
  CHECK(b[1].coeff(2) == Scalar(Rational(1)));
}

TEST_CASE("coordinates recover combinations") {
  EchelonBasis eb;
  eb.insert(vec({1, 0, 1}));
  eb.insert(vec({0, 1, 1}));
  auto c = eb.coordinates(vec({2, 3, 5}));
  REQUIRE(c.has_value());
  auto basis = eb.basis();
  SparseVec rebuilt;
  for (size_t i = 0; i < basis.size(); ++i) rebuilt += basis[i].scaled((*c)[i]);
  CHECK(rebuilt == vec({2, 3, 5}));
  CHECK_FALSE(eb.coordinates(vec({0, 0, 0, 7})).has_value());
}

TEST_CASE("kernel basis solves homogeneous systems") {
  // x0 + x1 - x2 = 0 ; x1 + x2 = 0
  std::vector<SparseVec> rows = {vec({1, 1, -1}), vec({0, 1, 1})};
  auto ker = kernel_basis(rows, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& r : rows) {
    Scalar dot = Scalar::zero();
    for (const auto& [i, c] : r.terms) dot += c * ker[0].coeff(i);
    CHECK(dot.is_zero());
  }
}

TEST_CASE("solve_linear finds a solution or reports inconsistency") {
  std::vector<SparseVec> rows = {vec({1, 1}), vec({1, -1})};
  auto x = solve_linear(rows, {Scalar(Rational(3)), Scalar(Rational(1))}, 2);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(Rational(2)));
  CHECK((*x)[1] == Scalar(Rational(1)));
  auto bad = solve_linear({vec({1, 1}), vec({2, 2})},
                          {Scalar(Rational(1)), Scalar(Rational(3))}, 2);
  CHECK_FALSE(bad.has_value());
}

TEST_CASE("rank over a cyclotomic field") {
  Cyclotomic i = Cyclotomic::root_of_unity(4);
  SparseVec a, b;
  a.terms = {{0, Scalar::one()}, {1, i}};
  b.terms = {{0, i}, {1, Scalar(Rational(-1))}};  // i * a
  CHECK(rank_of({a, b}) == 1);
}

TEST_CASE("random rank agreement with a shuffled spanning set") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 6;
    std::vector<SparseVec> base;
    for (int r = 0; r < 3; ++r) {
      SparseVec v;
      for (int j = 0; j < n; ++j) {
        long x = static_cast<long>(rng() % 5) - 2;
        if (x) v += SparseVec::unit(j, Scalar(Rational(x)));
      }
      base.push_back(v);
    }
    int rank = rank_of(base);
    // random combinations span the same space
    std::vector<SparseVec> combos;
    for (int r = 0; r < 6; ++r) {
      SparseVec v;
      for (const auto& b : base) {
        long c = static_cast<long>(rng() % 3) - 1;
        if (c) v += b.scaled(Scalar(Rational(c)));
      }
      combos.push_back(v);
    }
    CHECK(rank_of(combos) <= rank);
    for (const auto& b : base) combos.push_back(b);
    CHECK(rank_of(combos) == rank);
  }
}

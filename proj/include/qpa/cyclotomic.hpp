#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qpa/error.hpp"

namespace qpa {

using Rational = mpq_class;

/// Element of the cyclotomic field Q(zeta_N), stored as a vector of phi(N)
/// rationals in the power basis of zeta_N modulo the N-th cyclotomic
/// polynomial. The representation is canonical, so equality is coefficient
/// equality after conductor promotion. All arithmetic is exact.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& q) : conductor_(1), coeffs_(1, q) { canon(); }
  explicit Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }
  /// zeta_n^k
  static Cyclotomic root_power(long n, long k);
  /// zeta_n (primitive n-th root of unity)
  static Cyclotomic root_of_unity(long n) { return root_power(n, 1); }

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_rational() const;
  /// requires is_rational()
  Rational rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// throws Errc::InversionOfZero on zero
  Cyclotomic inverse() const;

  /// representation in Q(zeta_N) for N a multiple of the conductor
  Cyclotomic promoted(long n) const;
  /// exact rewrite in Q(zeta_d) for d | conductor, if the element lies there
  std::optional<Cyclotomic> demoted(long d) const;
  /// smallest-conductor representation (used for printing)
  Cyclotomic reduced() const;

  /// textual form "c0 + c1*z + ..." with z the primitive conductor-th root
  std::string str() const;

 private:
  void canon();  // strip to conductor invariants (no demotion)

  long conductor_;
  std::vector<Rational> coeffs_;
};

long euler_phi(long n);
long lcm_long(long a, long b);

}  // namespace qpa

#include "qpa/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qpa {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InversionOfZero: return "InversionOfZero";
    case Errc::OrderLimitExceeded: return "OrderLimitExceeded";
    case Errc::NotExactFactorization: return "NotExactFactorization";
    case Errc::CompatibilityFailure: return "CompatibilityFailure";
    case Errc::NoAntipode: return "NoAntipode";
    case Errc::NotSplitExtension: return "NotSplitExtension";
    case Errc::IncompatibleCocycles: return "IncompatibleCocycles";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotBicharacter: return "NotBicharacter";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotCoideal: return "NotCoideal";
    case Errc::NotRightCoideal: return "NotRightCoideal";
    case Errc::EigenvalueOutsideCyclotomic: return "EigenvalueOutsideCyclotomic";
    case Errc::MagicRelationFailure: return "MagicRelationFailure";
    case Errc::RelationFailure: return "RelationFailure";
    case Errc::GenerationFailure: return "GenerationFailure";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::StructureMismatch: return "StructureMismatch";
    case Errc::ConditionFails: return "ConditionFails";
    case Errc::InvalidCocycle: return "InvalidCocycle";
    case Errc::NotHopfSurjection: return "NotHopfSurjection";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalError: return "InternalError";
  }
  return "UnknownError";
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<Rational>;  // coefficient i of x^i

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// division with remainder; q monic divisors only in our uses, but handle general
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  int db = degree(b);
  Poly q(std::max<size_t>(a.size(), 1), Rational(0));
  while (true) {
    int da = degree(a);
    if (da < db) break;
    Rational c = a[da] / b[db];
    q[da - db] += c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
  }
  return {q, a};
}

// cyclotomic polynomial Phi_n, integer coefficients held as rationals
Poly cyclotomic_poly(long n, std::map<long, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;  // x^n - 1
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly_divmod(num, cyclotomic_poly(d, cache));
    (void)r;
    num = q;
  }
  num.resize(euler_phi(n) + 1);
  cache[n] = num;
  return num;
}

struct Context {
  long n = 1;
  long phi = 1;
  Poly modulus;                         // Phi_n, monic, degree phi
  std::vector<std::vector<Rational>> rows;  // rows[e - phi] = x^e mod Phi_n, e in [phi, n)
};

const Context& context(long n) {
  thread_local std::map<long, const Context*> local;
  auto lit = local.find(n);
  if (lit != local.end()) return *lit->second;
  static std::mutex mu;
  static std::map<long, std::unique_ptr<Context>> cache;
  static std::map<long, Poly> polycache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) {
    local[n] = it->second.get();
    return *it->second;
  }
  auto ctx = std::make_unique<Context>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  ctx->modulus = cyclotomic_poly(n, polycache);
  long phi = ctx->phi;
  // x^phi mod Phi = -(c_0 + ... + c_{phi-1} x^{phi-1})
  std::vector<Rational> cur(phi, Rational(0));
  for (long i = 0; i < phi; ++i) cur[i] = -ctx->modulus[i];
  if (n > phi) ctx->rows.push_back(cur);
  for (long e = phi + 1; e < n; ++e) {
    std::vector<Rational> next(phi, Rational(0));
    // multiply by x, reduce the overflow via row for x^phi
    Rational top = cur[phi - 1];
    for (long i = phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (long i = 0; i < phi; ++i) next[i] += top * ctx->rows[0][i];
    ctx->rows.push_back(next);
    cur = next;
  }
  const Context& ref = *ctx;
  local[n] = ctx.get();
  cache[n] = std::move(ctx);
  return ref;
}

// exponent e (any integer) to the canonical coefficient vector in conductor n
void add_power(std::vector<Rational>& acc, const Rational& c, long e, const Context& ctx) {
  e %= ctx.n;
  if (e < 0) e += ctx.n;
  if (e < ctx.phi) {
    acc[e] += c;
  } else {
    const auto& row = ctx.rows[e - ctx.phi];
    for (long i = 0; i < ctx.phi; ++i)
      if (row[i] != 0) acc[i] += c * row[i];
  }
}

}  // namespace

void Cyclotomic::canon() {
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::root_power(long n, long k) {
  if (n < 1) fail(Errc::PreconditionViolated, "root_power: n must be positive");
  const Context& ctx = context(n);
  Cyclotomic v;
  v.conductor_ = n;
  v.coeffs_.assign(ctx.phi, Rational(0));
  add_power(v.coeffs_, Rational(1), k, ctx);
  return v;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) {
      // may still be rational in a smaller field; check via demotion to 1
      return demoted(1).has_value();
    }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (coeffs_.size() == 1 || std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                                         [](const Rational& c) { return c == 0; }))
    return coeffs_[0];
  auto d = demoted(1);
  if (!d) fail(Errc::PreconditionViolated, "rational_value: element is not rational");
  return d->coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(long n) const {
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) fail(Errc::PreconditionViolated, "promotion target not a multiple");
  const Context& ctx = context(n);
  Cyclotomic v;
  v.conductor_ = n;
  v.coeffs_.assign(ctx.phi, Rational(0));
  long step = n / conductor_;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) add_power(v.coeffs_, coeffs_[k], static_cast<long>(k) * step, ctx);
  return v;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) {
    Cyclotomic a = *this;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += o.coeffs_[i];
    return a;
  }
  long n = lcm_long(conductor_, o.conductor_);
  Cyclotomic a = promoted(n), b = o.promoted(n);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) {
    Cyclotomic a = *this;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= o.coeffs_[i];
    return a;
  }
  long n = lcm_long(conductor_, o.conductor_);
  Cyclotomic a = promoted(n), b = o.promoted(n);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (conductor_ == 1 && o.conductor_ == 1) {
    Cyclotomic r;
    r.coeffs_[0] = coeffs_[0] * o.coeffs_[0];
    return r;
  }
  long n = lcm_long(conductor_, o.conductor_);
  Cyclotomic a = promoted(n), b = o.promoted(n);
  const Context& ctx = context(n);
  std::vector<Rational> acc(ctx.phi, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      add_power(acc, a.coeffs_[i] * b.coeffs_[j], static_cast<long>(i + j), ctx);
    }
  }
  Cyclotomic r;
  r.conductor_ = n;
  r.coeffs_ = std::move(acc);
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  long n = lcm_long(conductor_, o.conductor_);
  return promoted(n).coeffs_ == o.promoted(n).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(Errc::InversionOfZero, "inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
  const Context& ctx = context(conductor_);
  // extended euclid: u * this + v * Phi = 1 in Q[x]
  Poly r0 = ctx.modulus;
  Poly r1(coeffs_.begin(), coeffs_.end());
  Poly s0 = {Rational(0)}, s1 = {Rational(1)};
  while (degree(r1) > 0) {
    auto [q, r2] = poly_divmod(r0, r1);
    r0 = r1;
    r1 = r2;
    Poly qs = poly_mul(q, s1);
    Poly s2(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < s2.size(); ++i)
      s2[i] = (i < s0.size() ? s0[i] : Rational(0)) - (i < qs.size() ? qs[i] : Rational(0));
    s0 = s1;
    s1 = s2;
  }
  if (degree(r1) != 0) fail(Errc::InternalError, "cyclotomic inverse: gcd not constant");
  Rational lead = r1[0];
  Cyclotomic out;
  out.conductor_ = conductor_;
  out.coeffs_.assign(ctx.phi, Rational(0));
  for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(ctx.phi); ++i)
    out.coeffs_[i] = s1[i] / lead;
  return out;
}

std::optional<Cyclotomic> Cyclotomic::demoted(long d) const {
  if (conductor_ % d != 0) return std::nullopt;
  if (d == conductor_) return *this;
  long phid = euler_phi(d);
  // basis of Q(zeta_d) inside conductor_: zeta^{(N/d)k}, k < phi(d)
  std::vector<std::vector<Rational>> cols;
  const Context& ctx = context(conductor_);
  for (long k = 0; k < phid; ++k) {
    std::vector<Rational> col(ctx.phi, Rational(0));
    add_power(col, Rational(1), k * (conductor_ / d), ctx);
    cols.push_back(col);
  }
  // solve sum_k x_k * cols[k] = coeffs_ by gaussian elimination on the
  // (phi x phid) system
  long m = ctx.phi;
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(phid + 1, Rational(0)));
  for (long r = 0; r < m; ++r) {
    for (long k = 0; k < phid; ++k) aug[r][k] = cols[k][r];
    aug[r][phid] = coeffs_[r];
  }
  std::vector<long> pivot_col_of_row;
  long row = 0;
  for (long col = 0; col < phid && row < m; ++col) {
    long pr = -1;
    for (long r = row; r < m; ++r)
      if (aug[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(aug[row], aug[pr]);
    Rational inv = 1 / aug[row][col];
    for (long c = col; c <= phid; ++c) aug[row][c] *= inv;
    for (long r = 0; r < m; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (long c = col; c <= phid; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // consistency: rows beyond 'row' must have zero RHS
  for (long r = row; r < m; ++r)
    if (aug[r][phid] != 0) return std::nullopt;
  std::vector<Rational> x(phid, Rational(0));
  for (long r = 0; r < row; ++r) x[pivot_col_of_row[r]] = aug[r][phid];
  Cyclotomic out;
  out.conductor_ = d;
  out.coeffs_ = std::move(x);
  return out;
}

Cyclotomic Cyclotomic::reduced() const {
  for (long d = 1; d <= conductor_; ++d) {
    if (conductor_ % d != 0) continue;
    auto r = demoted(d);
    if (r) return *r;
  }
  return *this;
}

std::string Cyclotomic::str() const {
  Cyclotomic r = reduced();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < r.coeffs_.size(); ++k) {
    const Rational& c = r.coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational a = (!first && c < 0) ? Rational(-c) : c;
    bool unit_coeff = (a == 1 && k > 0);
    if (first && c < 0 && k > 0 && a == -1) {
      os << "-";
      unit_coeff = true;
    } else if (!unit_coeff) {
      os << a.get_str();
    }
    if (k > 0) {
      if (!unit_coeff) os << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace qpa

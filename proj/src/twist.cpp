#include "qpa/twist.hpp"

#include <functional>
#include <sstream>

namespace qpa {

Scalar CocycleForm::eval(const SparseVec& a, const SparseVec& b) const {
  Scalar s = Scalar::zero();
  for (const auto& [i, ca] : a.terms)
    for (const auto& [j, cb] : b.terms) s += ca * cb * table[i][j];
  return s;
}

Scalar CocycleForm::eval_inverse(const SparseVec& a, const SparseVec& b) const {
  Scalar s = Scalar::zero();
  for (const auto& [i, ca] : a.terms)
    for (const auto& [j, cb] : b.terms) s += ca * cb * inverse_table[i][j];
  return s;
}

namespace {

/// convolution inverse of a functional on H (x) H via the minimal polynomial
/// of the functional in the convolution algebra; nullopt when not invertible
std::optional<std::vector<std::vector<Scalar>>> convolution_inverse(
    const HopfData& h, const std::vector<std::vector<Scalar>>& table) {
  int n = h.dim;
  auto conv = [&](const std::vector<std::vector<Scalar>>& p,
                  const std::vector<std::vector<Scalar>>& q) {
    std::vector<std::vector<Scalar>> r(n, std::vector<Scalar>(n, Scalar::zero()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar acc = Scalar::zero();
        for (const auto& ti : h.comult[i])
          for (const auto& tj : h.comult[j])
            acc += ti.c * tj.c * p[ti.left][tj.left] * q[ti.right][tj.right];
        r[i][j] = acc;
      }
    return r;
  };
  std::vector<std::vector<Scalar>> eps(n, std::vector<Scalar>(n, Scalar::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) eps[i][j] = h.counit[i] * h.counit[j];
  auto flatten = [&](const std::vector<std::vector<Scalar>>& m, int tag) {
    SparseVec v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!m[i][j].is_zero()) v.terms.emplace_back(i * n + j, m[i][j]);
    v.terms.emplace_back(n * n + tag, Scalar::one());
    return v;
  };
  std::vector<std::vector<std::vector<Scalar>>> powers = {eps, table};
  EchelonBasis eb;
  eb.insert(flatten(powers[0], 0));
  SparseVec dep;
  for (int k = 1; k <= n * n + 1; ++k) {
    SparseVec r = eb.reduce(flatten(powers[k], k));
    if (r.leading_index() >= n * n) {
      dep = r;
      break;
    }
    eb.insert(std::move(r));
    powers.push_back(conv(powers[k], table));
  }
  if (dep.is_zero()) fail(Errc::InternalError, "no convolution dependency for the cocycle");
  Scalar c0 = dep.coeff(n * n);
  if (c0.is_zero()) return std::nullopt;
  Scalar scale = -(c0.inverse());
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero()));
  for (const auto& [idx, c] : dep.terms) {
    if (idx < n * n) continue;
    int t = idx - n * n;
    if (t == 0) continue;
    Scalar f = scale * c;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!powers[t - 1][i][j].is_zero()) inv[i][j] += f * powers[t - 1][i][j];
  }
  return inv;
}

}  // namespace

CocycleForm make_cocycle_form(HopfPtr h, std::vector<std::vector<Scalar>> table) {
  const HopfData& H = *h;
  int n = H.dim;
  if (table.size() != static_cast<size_t>(n)) fail(Errc::InvalidCocycle, "table size mismatch");
  CocycleForm out;
  out.parent = h;
  out.table = std::move(table);
  // normalization sigma(x, 1) = sigma(1, x) = eps(x)
  auto eval_vec = [&](const SparseVec& a, const SparseVec& b) {
    Scalar s = Scalar::zero();
    for (const auto& [i, ca] : a.terms)
      for (const auto& [j, cb] : b.terms) s += ca * cb * out.table[i][j];
    return s;
  };
  for (int i = 0; i < n; ++i) {
    if (!(eval_vec(SparseVec::unit(i), H.unit) == H.counit[i]) ||
        !(eval_vec(H.unit, SparseVec::unit(i)) == H.counit[i]))
      fail(Errc::InvalidCocycle, "cocycle not normalized at " + H.labels[i]);
  }
  // cocycle identity via the convolution-weighted product tables
  //   t1(x,y) = sum sigma(x1,y1) x2 y2 ;  t2(y,z) = sum sigma(y2,z2) y1 z1
  // identity: sigma(t1(x,y), z) = sigma(x, t2(y,z)) for all basis x,y,z
  std::vector<std::vector<SparseVec>> t1(n, std::vector<SparseVec>(n));
  std::vector<std::vector<SparseVec>> t2(n, std::vector<SparseVec>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<Scalar> acc1(n, Scalar::zero()), acc2(n, Scalar::zero());
      for (const auto& tx : H.comult[x])
        for (const auto& ty : H.comult[y]) {
          Scalar c1 = tx.c * ty.c * out.table[tx.left][ty.left];
          if (!c1.is_zero())
            for (const auto& [k, m] : H.mult[tx.right][ty.right].terms) acc1[k] += c1 * m;
          Scalar c2 = tx.c * ty.c * out.table[tx.right][ty.right];
          if (!c2.is_zero())
            for (const auto& [k, m] : H.mult[tx.left][ty.left].terms) acc2[k] += c2 * m;
        }
      t1[x][y] = SparseVec::from_dense(acc1);
      t2[x][y] = SparseVec::from_dense(acc2);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!(eval_vec(t1[x][y], SparseVec::unit(z)) == eval_vec(SparseVec::unit(x), t2[y][z])))
          fail(Errc::InvalidCocycle, "2-cocycle identity fails at (" + H.labels[x] + ", " +
                                         H.labels[y] + ", " + H.labels[z] + ")");
      }
  auto inv = convolution_inverse(H, out.table);
  if (!inv) fail(Errc::InvalidCocycle, "cocycle is not convolution invertible");
  out.inverse_table = std::move(*inv);
  // verify the inverse: sum sigma(x1,y1) sigma^{-1}(x2,y2) = eps(x) eps(y)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar acc = Scalar::zero();
      for (const auto& tx : H.comult[x])
        for (const auto& ty : H.comult[y])
          acc += tx.c * ty.c * out.table[tx.left][ty.left] *
                 out.inverse_table[tx.right][ty.right];
      if (!(acc == H.counit[x] * H.counit[y]))
        fail(Errc::InternalError, "convolution inverse fails to verify");
    }
  return out;
}

CocycleForm trivial_cocycle(HopfPtr h) {
  int n = h->dim;
  std::vector<std::vector<Scalar>> table(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = h->counit[i] * h->counit[j];
  return make_cocycle_form(h, std::move(table));
}

HopfPtr doi_twist(const HopfData& h, const CocycleForm& sigma) {
  int n = h.dim;
  auto out = std::make_shared<HopfData>();
  out->dim = n;
  for (int i = 0; i < n; ++i) out->labels.push_back("[" + h.labels[i] + "]");
  out->unit = h.unit;
  out->comult = h.comult;
  out->counit = h.counit;
  out->mult.assign(n, std::vector<SparseVec>(n));
  // [x][y] = sigma(x1,y1) sigma^{-1}(x3,y3) x2 y2, with Delta^2 terms grouped
  // by the middle leg so only nonzero products are combined
  struct Leg {
    int mid;
    int outer_l, outer_r;
    Scalar c;
  };
  std::vector<std::vector<Leg>> d2(n);
  for (int i = 0; i < n; ++i)
    for (const auto& t : h.comult[i])
      for (const auto& t2 : h.comult[t.left])
        d2[i].push_back({t2.right, t2.left, t.right, t.c * t2.c});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<Scalar> acc(n, Scalar::zero());
      for (const auto& lx : d2[x])
        for (const auto& ly : d2[y]) {
          const SparseVec& prod = h.mult[lx.mid][ly.mid];
          if (prod.is_zero()) continue;
          Scalar c = lx.c * ly.c * sigma.table[lx.outer_l][ly.outer_l] *
                     sigma.inverse_table[lx.outer_r][ly.outer_r];
          if (c.is_zero()) continue;
          for (const auto& [k, m] : prod.terms) acc[k] += c * m;
        }
      out->mult[x][y] = SparseVec::from_dense(acc);
    }
  out->antipode = solve_antipode(*out);
  HopfReport rep = verify_hopf(*out);
  if (!rep.all_axioms()) fail(Errc::InvalidCocycle, "twisted algebra fails: " + rep.first_failure);
  return out;
}

SuffTwistResult check_suff_twist(const MagicCert& cert, const CocycleForm& sigma) {
  if (cert.parent != sigma.parent)
    fail(Errc::PreconditionViolated, "certificate and cocycle live over different algebras");
  if (!cert.is_full_certificate)
    fail(Errc::PreconditionViolated, "the sufficiency test needs a full certificate");
  SuffTwistResult out;
  int n = cert.size;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Scalar expect = (i == j && i == l) ? Scalar::one() : Scalar::zero();
        if (!(sigma.eval(cert.entries[i][j], cert.entries[i][l]) == expect)) {
          out.witness = "sigma(x_" + std::to_string(i) + std::to_string(j) + ", x_" +
                        std::to_string(i) + std::to_string(l) + ") != " +
                        (expect.is_one() ? "1" : "0");
          return out;
        }
        if (!(sigma.eval_inverse(cert.entries[i][j], cert.entries[i][l]) == expect)) {
          out.witness = "sigma^{-1}(x_" + std::to_string(i) + std::to_string(j) + ", x_" +
                        std::to_string(i) + std::to_string(l) + ") != " +
                        (expect.is_one() ? "1" : "0");
          return out;
        }
      }
  out.holds = true;
  out.twisted_algebra = doi_twist(*cert.parent, sigma);
  std::vector<std::string> prov = cert.provenance;
  prov.push_back("coordinates reread in the cocycle twist");
  MagicCert t = verify_magic(out.twisted_algebra, cert.entries, std::move(prov));
  if (!t.is_full_certificate)
    fail(Errc::GenerationFailure, "twisted matrix does not generate the twist");
  out.twisted = std::move(t);
  return out;
}

CocycleForm lift_cocycle(HopfPtr h, const HopfMap& p, const GroupAlgebra& target,
                         const Bicharacter& s) {
  if (p.source != h || p.target != target.H)
    fail(Errc::PreconditionViolated, "projection endpoints mismatch");
  std::string why;
  if (!verify_hopf_map(p, &why)) fail(Errc::NotHopfSurjection, why);
  if (rank_of(p.matrix) != target.H->dim) fail(Errc::NotHopfSurjection, "p is not surjective");
  if (!target.G.is_abelian()) fail(Errc::NotAbelian, "bicharacter group must be abelian");
  if (!(s.Gamma.elements() == target.G.elements()))
    fail(Errc::PreconditionViolated, "bicharacter group differs from the projection target");
  int n = h->dim;
  std::vector<std::vector<Scalar>> table(n, std::vector<Scalar>(n, Scalar::zero()));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Scalar acc = Scalar::zero();
      for (const auto& [i, ci] : p.matrix[a].terms)
        for (const auto& [j, cj] : p.matrix[b].terms) acc += ci * cj * s.table[i][j];
      table[a][b] = acc;
    }
  return make_cocycle_form(h, std::move(table));
}

HopfMap character_projection(const FunctionAlgebra& fun, const PermGroup& a,
                             const GroupAlgebra& target) {
  if (!a.is_subgroup_of(fun.G)) fail(Errc::PreconditionViolated, "A is not a subgroup of G");
  if (!a.is_abelian()) fail(Errc::NotAbelian, "character projection needs abelian A");
  auto chars = characters(a);
  int m = static_cast<int>(a.order());
  if (chars.size() != static_cast<size_t>(m) || target.G.order() != static_cast<size_t>(m))
    fail(Errc::PreconditionViolated, "character count mismatch");
  // multiplication table of A^ (pointwise product of characters)
  auto char_mul = [&](int i, int j) {
    std::vector<Cyclotomic> prod(m);
    for (int k = 0; k < m; ++k) prod[k] = chars[i].values[k] * chars[j].values[k];
    for (size_t t = 0; t < chars.size(); ++t)
      if (chars[t].values == prod) return static_cast<int>(t);
    fail(Errc::InternalError, "character product missing");
  };
  std::vector<std::vector<int>> t_hat(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t_hat[i][j] = char_mul(i, j);
  std::vector<std::vector<int>> t_gamma(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t_gamma[i][j] = target.G.multiply(i, j);
  // deterministic isomorphism A^ -> Gamma by backtracking on images of all
  // elements in order (small groups only)
  std::vector<int> iso(m, -1);
  std::vector<bool> used(m, false);
  auto order_in = [&](const std::vector<std::vector<int>>& t, int x) {
    int e = -1;
    for (int i = 0; i < m; ++i) {
      bool id = true;
      for (int j = 0; j < m; ++j)
        if (t[i][j] != j) id = false;
      if (id) e = i;
    }
    int y = x, o = 1;
    while (y != e) {
      y = t[y][x];
      ++o;
    }
    return o;
  };
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == m) {
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
          if (iso[t_hat[x][y]] != t_gamma[iso[x]][iso[y]]) return false;
      return true;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c] || order_in(t_hat, i) != order_in(t_gamma, c)) continue;
      bool consistent = true;
      for (int j = 0; j <= i && consistent; ++j) {
        if (iso[j] < 0) continue;
        int prod = t_hat[i][j];
        if (prod <= i && prod != i && iso[prod] >= 0 && iso[prod] != t_gamma[c][iso[j]])
          consistent = false;
      }
      if (!consistent) continue;
      iso[i] = c;
      used[c] = true;
      if (place(i + 1)) return true;
      iso[i] = -1;
      used[c] = false;
    }
    return false;
  };
  if (!place(0)) fail(Errc::PreconditionViolated, "A^ is not isomorphic to the target group");
  // p(e_g) = [g in A] (1/|A|) sum_chi chi(g)^{-1} * iso(chi)
  HopfMap p;
  p.source = fun.H;
  p.target = target.H;
  p.matrix.assign(fun.H->dim, SparseVec{});
  Rational inv_m(1, m);
  for (int gi = 0; gi < fun.H->dim; ++gi) {
    int ai = a.index_of(fun.G.element(gi));
    if (ai < 0) continue;
    int ainv = a.inverse_of(ai);
    std::vector<Scalar> acc(m, Scalar::zero());
    for (int c = 0; c < m; ++c) acc[iso[c]] += chars[c].values[ainv] * Cyclotomic(inv_m);
    p.matrix[gi] = SparseVec::from_dense(acc);
  }
  std::string why;
  if (!verify_hopf_map(p, &why)) fail(Errc::InternalError, "character projection invalid: " + why);
  return p;
}

}  // namespace qpa

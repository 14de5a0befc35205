#include "qpa/coideal.hpp"

#include <algorithm>
#include <map>

namespace qpa {

namespace {

/// expresses vectors in a fixed independent family via an augmented echelon
class BasisSolver {
 public:
  BasisSolver(const std::vector<SparseVec>& family, int ambient_dim)
      : m_(static_cast<int>(family.size())), n_(ambient_dim) {
    for (int i = 0; i < m_; ++i) {
      SparseVec row = family[i];
      row.terms.emplace_back(n_ + i, Scalar::one());
      if (!eb_.insert(std::move(row)))
        fail(Errc::PreconditionViolated, "family is linearly dependent");
    }
  }

  /// coordinates of v in the family; nullopt if outside the span
  std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const {
    SparseVec r = eb_.reduce(v);
    std::vector<Scalar> out(m_, Scalar::zero());
    for (const auto& [i, c] : r.terms) {
      if (i < n_) return std::nullopt;
      out[i - n_] = -c;
    }
    return out;
  }

 private:
  int m_, n_;
  EchelonBasis eb_;
};

using Poly = std::vector<Scalar>;  // monic, coefficient k of t^k

int pdeg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

Scalar peval(const Poly& p, const Scalar& x) {
  Scalar acc = Scalar::zero();
  for (int i = pdeg(p); i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

Poly pdeflate(const Poly& p, const Scalar& root) {
  // p / (t - root), exact
  int d = pdeg(p);
  Poly q(d, Scalar::zero());
  Scalar carry = Scalar::zero();
  for (int i = d; i >= 1; --i) {
    q[i - 1] = p[i] + carry;
    carry = q[i - 1] * root;
  }
  return q;
}

/// minimal polynomial of a square matrix over the scalar field (Krylov with
/// dependency tracking through tagged coordinates)
Poly minimal_polynomial(const std::vector<std::vector<Scalar>>& m) {
  int d = static_cast<int>(m.size());
  auto matmul = [&](const std::vector<std::vector<Scalar>>& a) {
    std::vector<std::vector<Scalar>> r(d, std::vector<Scalar>(d, Scalar::zero()));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < d; ++j)
          if (!m[k][j].is_zero()) r[i][j] += a[i][k] * m[k][j];
      }
    return r;
  };
  auto flatten = [&](const std::vector<std::vector<Scalar>>& a, int tag) {
    SparseVec v;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!a[i][j].is_zero()) v.terms.emplace_back(i * d + j, a[i][j]);
    v.terms.emplace_back(d * d + tag, Scalar::one());
    return v;
  };
  std::vector<std::vector<Scalar>> power(d, std::vector<Scalar>(d, Scalar::zero()));
  for (int i = 0; i < d; ++i) power[i][i] = Scalar::one();
  EchelonBasis eb;
  for (int k = 0;; ++k) {
    SparseVec r = eb.reduce(flatten(power, k));
    if (r.leading_index() >= d * d) {
      Poly p(k + 1, Scalar::zero());
      for (const auto& [idx, c] : r.terms) p[idx - d * d] = c;
      // normalize monic
      Scalar lead = p[pdeg(p)];
      if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        for (auto& c : p) c *= inv;
      }
      return p;
    }
    eb.insert(std::move(r));
    power = matmul(power);
    if (k > d + 1) fail(Errc::InternalError, "minimal polynomial search exceeded bound");
  }
}

/// order of a root of unity, or 0 if the element is not one
long root_of_unity_order(const Scalar& c) {
  long bound = lcm_long(2, c.conductor());
  Scalar p = c;
  for (long r = 1; r <= bound; ++r) {
    if (p.is_one()) return r;
    p *= c;
  }
  return 0;
}

/// all roots of p lying in 0, rationals, or roots of unity; returns
/// (roots, fully_split)
std::pair<std::vector<Scalar>, bool> cyclotomic_roots(Poly p, long exponent_bound) {
  std::vector<Scalar> roots;
  auto take = [&](const Scalar& r) {
    roots.push_back(r);
    p = pdeflate(p, r);
  };
  bool progress = true;
  while (pdeg(p) > 0 && progress) {
    progress = false;
    if (pdeg(p) == 1) {
      take(-p[0]);
      progress = true;
      continue;
    }
    if (peval(p, Scalar::zero()).is_zero()) {
      take(Scalar::zero());
      progress = true;
      continue;
    }
    // binomial t^l - c with c a root of unity: exact radical solution
    {
      int d = pdeg(p);
      bool binom = true;
      for (int i = 1; i < d; ++i)
        if (!p[i].is_zero()) binom = false;
      if (binom) {
        Scalar c = -p[0];
        long r = root_of_unity_order(c);
        if (r > 0) {
          // c = zeta_r^s
          long s = -1;
          for (long k = 0; k < r; ++k)
            if (Cyclotomic::root_power(r, k) == c) {
              s = k;
              break;
            }
          if (s >= 0) {
            for (long k = 0; k < d; ++k) take(Cyclotomic::root_power(r * d, s + r * k));
            progress = true;
            continue;
          }
        }
      }
    }
    // roots of unity up to the exponent-like bound
    long e = std::max<long>(exponent_bound, 2);
    for (const auto& c : p) e = lcm_long(e, c.conductor());
    for (long k = 0; k < e; ++k) {
      Scalar cand = Cyclotomic::root_power(e, k);
      if (peval(p, cand).is_zero()) {
        take(cand);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // rational roots when all coefficients are rational and small
    bool rational = true;
    for (const auto& c : p)
      if (!c.is_rational()) {
        rational = false;
        break;
      }
    if (rational) {
      // clear denominators; candidates num/den with num | a0, den | lead
      mpz_class denlcm = 1;
      for (const auto& c : p)
        if (!c.is_zero()) denlcm = denlcm / gcd(denlcm, c.rational_value().get_den()) *
                                   c.rational_value().get_den();
      std::vector<mpz_class> ip;
      for (const auto& c : p)
        ip.push_back(c.is_zero() ? mpz_class(0)
                                 : mpz_class(c.rational_value().get_num() *
                                             (denlcm / c.rational_value().get_den())));
      mpz_class a0 = abs(ip[0]), lead = abs(ip[pdeg(p)]);
      if (a0 != 0 && a0 < 100000 && lead < 100000) {
        for (long num = 1; num <= a0.get_si(); ++num) {
          if (a0 % num != 0) continue;
          for (long den = 1; den <= lead.get_si(); ++den) {
            if (lead % den != 0) continue;
            for (int sign : {1, -1}) {
              Scalar cand{Rational(sign * num, den)};
              if (peval(p, cand).is_zero()) {
                take(cand);
                progress = true;
                break;
              }
            }
            if (progress) break;
          }
          if (progress) break;
        }
      }
    }
  }
  return {roots, pdeg(p) <= 0};
}

}  // namespace

bool canonical_less(const SparseVec& a, const SparseVec& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms[i].first != b.terms[i].first) return a.terms[i].first < b.terms[i].first;
    if (!(a.terms[i].second == b.terms[i].second)) {
      Cyclotomic x = a.terms[i].second.reduced(), y = b.terms[i].second.reduced();
      if (x.conductor() != y.conductor()) return x.conductor() < y.conductor();
      return x.coeffs() < y.coeffs();
    }
  }
  return a.terms.size() < b.terms.size();
}

CoidealSub check_coideal_subalgebra(HopfPtr h, const std::vector<SparseVec>& basis,
                                    CoidealSide side) {
  CoidealSub out;
  out.parent = h;
  out.side = side;
  EchelonBasis eb;
  for (const auto& v : basis)
    if (!eb.insert(v))
      fail(Errc::PreconditionViolated, "coideal basis vectors are linearly dependent");
  if (!eb.contains(h->unit)) fail(Errc::NotClosed, "subspace does not contain the unit");
  out.basis = eb.basis();

  out.is_subalgebra = true;
  for (const auto& u : out.basis)
    for (const auto& v : out.basis) {
      SparseVec p = h->multiply(u, v);
      if (!eb.contains(p))
        fail(Errc::NotClosed, "product escapes the subspace: (" + h->describe(u) + ") * (" +
                                  h->describe(v) + ")");
    }

  out.is_coideal = true;
  for (const auto& v : out.basis) {
    Tensor2 t = h->comult_of(v);
    std::map<int, SparseVec> slices;
    for (const auto& [key, c] : t) {
      if (side == CoidealSide::Left)
        slices[key.first] += SparseVec::unit(key.second, c);  // Delta(L) in H (x) L
      else
        slices[key.second] += SparseVec::unit(key.first, c);  // Delta(R) in R (x) H
    }
    for (const auto& [i, slice] : slices)
      if (!eb.contains(slice))
        fail(Errc::NotCoideal, "coproduct leg escapes at " + h->describe(v));
  }

  out.commutative = true;
  for (const auto& u : out.basis) {
    for (const auto& v : out.basis)
      if (!(h->multiply(u, v) == h->multiply(v, u))) {
        out.commutative = false;
        break;
      }
    if (!out.commutative) break;
  }

  if (out.commutative) {
    // trace form T_ij = tr(mult by l_i l_j) on L
    int m = out.dim();
    BasisSolver solver(out.basis, h->dim);
    auto mult_op = [&](const SparseVec& l) {
      std::vector<std::vector<Scalar>> op(m, std::vector<Scalar>(m, Scalar::zero()));
      for (int j = 0; j < m; ++j) {
        auto coords = solver.coordinates(h->multiply(l, out.basis[j]));
        if (!coords) fail(Errc::InternalError, "closed product left the span");
        for (int i = 0; i < m; ++i) op[i][j] = (*coords)[i];
      }
      return op;
    };
    std::vector<SparseVec> gram_rows;
    for (int i = 0; i < m; ++i) {
      SparseVec row;
      for (int j = 0; j < m; ++j) {
        auto op = mult_op(h->multiply(out.basis[i], out.basis[j]));
        Scalar tr = Scalar::zero();
        for (int k = 0; k < m; ++k) tr += op[k][k];
        if (!tr.is_zero()) row.terms.emplace_back(j, tr);
      }
      gram_rows.push_back(std::move(row));
    }
    out.separable = (rank_of(gram_rows) == m);
  }
  return out;
}

std::vector<SparseVec> primitive_idempotents(const CoidealSub& l, long exponent_bound) {
  if (!l.commutative || !l.separable)
    fail(Errc::PreconditionViolated, "primitive idempotents need a commutative separable algebra");
  const HopfData& h = *l.parent;
  int m = l.dim();
  BasisSolver solver(l.basis, h.dim);
  // multiplication operators of the basis elements, in L-coordinates
  std::vector<std::vector<std::vector<Scalar>>> ops;
  for (const auto& b : l.basis) {
    std::vector<std::vector<Scalar>> op(m, std::vector<Scalar>(m, Scalar::zero()));
    for (int j = 0; j < m; ++j) {
      auto coords = solver.coordinates(h.multiply(b, l.basis[j]));
      if (!coords) fail(Errc::InternalError, "closed product left the span");
      for (int i = 0; i < m; ++i) op[i][j] = (*coords)[i];
    }
    ops.push_back(std::move(op));
  }
  // iterated splitting of L-coordinate subspaces into joint eigenspaces
  std::vector<std::vector<SparseVec>> spaces;  // each: list of L-coordinate vectors
  {
    std::vector<SparseVec> full;
    for (int i = 0; i < m; ++i) full.push_back(SparseVec::unit(i));
    spaces.push_back(std::move(full));
  }
  auto apply_op = [&](const std::vector<std::vector<Scalar>>& op, const SparseVec& v) {
    std::vector<Scalar> acc(m, Scalar::zero());
    for (const auto& [j, c] : v.terms)
      for (int i = 0; i < m; ++i)
        if (!op[i][j].is_zero()) acc[i] += op[i][j] * c;
    return SparseVec::from_dense(acc);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& op : ops) {
      std::vector<std::vector<SparseVec>> next;
      for (auto& space : spaces) {
        int d = static_cast<int>(space.size());
        if (d == 1) {
          next.push_back(space);
          continue;
        }
        // restriction of op to the subspace, in its own coordinates
        BasisSolver sub(space, m);
        std::vector<std::vector<Scalar>> rest(d, std::vector<Scalar>(d, Scalar::zero()));
        for (int j = 0; j < d; ++j) {
          auto coords = sub.coordinates(apply_op(op, space[j]));
          if (!coords) fail(Errc::InternalError, "subspace not invariant");
          for (int i = 0; i < d; ++i) rest[i][j] = (*coords)[i];
        }
        Poly minpoly = minimal_polynomial(rest);
        auto [roots, full_split] = cyclotomic_roots(minpoly, exponent_bound);
        if (roots.empty() || (roots.size() == 1 && full_split)) {
          next.push_back(space);  // scalar here, or no root found by this operator
          continue;
        }
        // eigenspaces ker(rest - root) plus the complement ker(q(rest)) for
        // the unsplit factor q, lifted back through `space`
        auto lift_kernel = [&](const std::vector<SparseVec>& ker) {
          std::vector<SparseVec> lifted;
          for (const auto& k : ker) {
            std::vector<Scalar> acc(m, Scalar::zero());
            for (const auto& [j, c] : k.terms)
              for (const auto& [i2, c2] : space[j].terms) acc[i2] += c * c2;
            lifted.push_back(SparseVec::from_dense(acc));
          }
          return rref(lifted);
        };
        std::vector<std::vector<SparseVec>> pieces;
        int covered = 0;
        for (const auto& root : roots) {
          std::vector<SparseVec> rows;
          for (int i = 0; i < d; ++i) {
            SparseVec row;
            for (int j = 0; j < d; ++j) {
              Scalar v = rest[i][j] - (i == j ? root : Scalar::zero());
              if (!v.is_zero()) row.terms.emplace_back(j, v);
            }
            rows.push_back(std::move(row));
          }
          auto piece = lift_kernel(kernel_basis(rows, d));
          if (piece.empty()) continue;
          covered += static_cast<int>(piece.size());
          pieces.push_back(std::move(piece));
        }
        if (!full_split && covered < d) {
          // complement: kernel of q(rest) for q = minpoly / prod(t - root)
          Poly q = minpoly;
          for (const auto& root : roots) q = pdeflate(q, root);
          // rows of q(rest)
          std::vector<std::vector<Scalar>> qm(d, std::vector<Scalar>(d, Scalar::zero()));
          for (int i = 0; i < d; ++i) qm[i][i] = q[pdeg(q)];
          for (int t = pdeg(q) - 1; t >= 0; --t) {
            // qm <- qm * rest + q[t] * I
            std::vector<std::vector<Scalar>> nm(d, std::vector<Scalar>(d, Scalar::zero()));
            for (int i = 0; i < d; ++i)
              for (int k2 = 0; k2 < d; ++k2) {
                if (qm[i][k2].is_zero()) continue;
                for (int j = 0; j < d; ++j)
                  if (!rest[k2][j].is_zero()) nm[i][j] += qm[i][k2] * rest[k2][j];
              }
            for (int i = 0; i < d; ++i) nm[i][i] += q[t];
            qm = std::move(nm);
          }
          std::vector<SparseVec> rows;
          for (int i = 0; i < d; ++i) rows.push_back(SparseVec::from_dense(qm[i]));
          auto piece = lift_kernel(kernel_basis(rows, d));
          covered += static_cast<int>(piece.size());
          if (!piece.empty()) pieces.push_back(std::move(piece));
        }
        if (covered != d)
          fail(Errc::EigenvalueOutsideCyclotomic, "eigenspace decomposition does not exhaust");
        if (pieces.size() > 1) changed = true;
        for (auto& p : pieces) next.push_back(std::move(p));
      }
      spaces = std::move(next);
    }
  }
  std::vector<SparseVec> idems;
  for (const auto& space : spaces) {
    if (space.size() != 1)
      fail(Errc::EigenvalueOutsideCyclotomic, "joint eigenspace of dimension > 1 remains");
    // lift L-coordinates to H-coordinates
    std::vector<Scalar> acc(h.dim, Scalar::zero());
    for (const auto& [j, c] : space[0].terms)
      for (const auto& [i, c2] : l.basis[j].terms) acc[i] += c * c2;
    SparseVec v = SparseVec::from_dense(acc);
    SparseVec v2 = h.multiply(v, v);
    // v^2 = c v with c != 0 in a separable algebra
    Scalar c;
    {
      BasisSolver one(std::vector<SparseVec>{v}, h.dim);
      auto coords = one.coordinates(v2);
      if (!coords || (*coords)[0].is_zero())
        fail(Errc::EigenvalueOutsideCyclotomic, "one-dimensional component is nilpotent");
      c = (*coords)[0];
    }
    idems.push_back(v.scaled(c.inverse()));
  }
  std::sort(idems.begin(), idems.end(), canonical_less);
  // verify the complete orthogonal system
  SparseVec sum;
  for (size_t i = 0; i < idems.size(); ++i) {
    sum += idems[i];
    for (size_t j = 0; j < idems.size(); ++j) {
      SparseVec p = h.multiply(idems[i], idems[j]);
      if (i == j ? !(p == idems[i]) : !p.is_zero())
        fail(Errc::InternalError, "idempotent system fails orthogonality");
    }
  }
  if (!(sum == h.unit)) fail(Errc::InternalError, "idempotents do not sum to the unit");
  return idems;
}

CoefficientMatrix coefficient_matrix(const CoidealSub& l, long exponent_bound) {
  const HopfData& h = *l.parent;
  if (!l.commutative || !l.separable)
    fail(Errc::PreconditionViolated, "coefficient matrix needs a commutative separable coideal");
  if (l.side == CoidealSide::Right) {
    // R = S(L): carry to the left side through the antipode
    std::vector<SparseVec> mapped;
    for (const auto& v : l.basis) mapped.push_back(h.apply_antipode(v));
    CoidealSub left = check_coideal_subalgebra(l.parent, mapped, CoidealSide::Left);
    return coefficient_matrix(left, exponent_bound);
  }
  CoefficientMatrix out;
  out.idempotents = primitive_idempotents(l, exponent_bound);
  int m = static_cast<int>(out.idempotents.size());
  out.size = m;
  BasisSolver solver(out.idempotents, h.dim);
  out.entries.assign(m, std::vector<SparseVec>(m));
  for (int j = 0; j < m; ++j) {
    Tensor2 t = h.comult_of(out.idempotents[j]);
    // group by left leg: Delta(f_j) = sum_a e_a (x) row_a, row_a in L
    std::map<int, SparseVec> rows;
    for (const auto& [key, c] : t) rows[key.first] += SparseVec::unit(key.second, c);
    for (const auto& [a, row] : rows) {
      auto coords = solver.coordinates(row);
      if (!coords)
        fail(Errc::MagicRelationFailure, "coproduct leg not spanned by the idempotents");
      for (int i = 0; i < m; ++i)
        if (!(*coords)[i].is_zero()) out.entries[i][j] += SparseVec::unit(a, (*coords)[i]);
    }
  }
  // orthogonality relations and sums
  for (int i = 0; i < m; ++i) {
    SparseVec rowsum, colsum;
    for (int j = 0; j < m; ++j) {
      rowsum += out.entries[i][j];
      colsum += out.entries[j][i];
      for (int k = 0; k < m; ++k) {
        SparseVec p = h.multiply(out.entries[i][j], out.entries[i][k]);
        if (j == k ? !(p == out.entries[i][j]) : !p.is_zero())
          fail(Errc::MagicRelationFailure, "row orthogonality fails");
        SparseVec q = h.multiply(out.entries[j][i], out.entries[k][i]);
        if (j == k ? !(q == out.entries[j][i]) : !q.is_zero())
          fail(Errc::MagicRelationFailure, "column orthogonality fails");
      }
    }
    if (!(rowsum == h.unit) || !(colsum == h.unit))
      fail(Errc::MagicRelationFailure, "row or column sum differs from 1");
  }
  return out;
}

CoidealSub construct_named_lx(const Bicrossed& b, int x_index) {
  if (!b.mp.right_action_trivial())
    fail(Errc::PreconditionViolated, "L^x needs the right action to be trivial");
  std::vector<SparseVec> basis;
  int x = x_index;
  int one_f = b.mp.F.index_of(Perm::identity(b.mp.F.degree()));
  int cur = one_f;
  do {
    for (int g = 0; g < b.n_gamma(); ++g) basis.push_back(SparseVec::unit(b.index(g, cur)));
    cur = b.mp.F.index_of(b.mp.F.element(cur) * b.mp.F.element(x));
  } while (cur != one_f);
  return check_coideal_subalgebra(b.H, basis, CoidealSide::Left);
}

CoidealSub construct_named_onekt(const Bicrossed& b, const PermGroup& t) {
  if (!t.is_subgroup_of(b.mp.F)) fail(Errc::PreconditionViolated, "T is not a subgroup of F");
  for (std::size_t g = 0; g < b.mp.Gamma.order(); ++g)
    for (const auto& x : t.elements())
      if (!t.contains(b.mp.F.element(b.mp.left[g][b.mp.F.index_of(x)])))
        fail(Errc::PreconditionViolated, "T is not stable under the left action");
  std::vector<SparseVec> basis;
  for (const auto& x : t.elements()) basis.push_back(b.lift(b.mp.F.index_of(x)));
  return check_coideal_subalgebra(b.H, basis, CoidealSide::Right);
}

CoidealSub construct_named_xt(const Bicrossed& b, const PermGroup& t) {
  if (!b.mp.right_action_trivial())
    fail(Errc::PreconditionViolated, "X(T) needs the right action to be trivial");
  if (!t.is_subgroup_of(b.mp.F)) fail(Errc::PreconditionViolated, "T is not a subgroup of F");
  std::vector<SparseVec> basis;
  for (int g = 0; g < b.n_gamma(); ++g) {
    int ginv = b.mp.Gamma.inverse_of(g);
    for (const auto& y : t.elements())
      basis.push_back(SparseVec::unit(b.index(g, b.mp.left[ginv][b.mp.F.index_of(y)])));
  }
  return check_coideal_subalgebra(b.H, basis, CoidealSide::Right);
}

CoidealSub construct_named_kgh(const Bicrossed& b) {
  GrouplikeData gl = grouplikes_split(b);
  return check_coideal_subalgebra(b.H, gl.elements, CoidealSide::Right);
}

GradedSupport graded_analysis(const Bicrossed& b, const CoidealSub& r) {
  if (r.side != CoidealSide::Right || !r.is_coideal || !r.is_subalgebra)
    fail(Errc::NotRightCoideal, "graded analysis needs a verified right coideal subalgebra");
  const HopfData& h = *b.H;
  GradedSupport out;
  int nf = b.n_f(), ng = b.n_gamma();
  int dim_r = r.dim();
  // components R_x: combinations of the basis supported inside block x
  out.components.assign(nf, {});
  for (int x = 0; x < nf; ++x) {
    std::vector<SparseVec> rows;  // constraints over combination coefficients
    std::map<int, SparseVec> bycoord;
    for (int i = 0; i < dim_r; ++i)
      for (const auto& [c, v] : r.basis[i].terms)
        if (b.unindex(c).second != x) bycoord[c] += SparseVec::unit(i, v);
    for (auto& [c, row] : bycoord) rows.push_back(std::move(row));
    auto ker = kernel_basis(rows, dim_r);
    std::vector<SparseVec> vecs;
    for (const auto& k : ker) {
      std::vector<Scalar> acc(h.dim, Scalar::zero());
      for (const auto& [i, c] : k.terms)
        for (const auto& [j, c2] : r.basis[i].terms) acc[j] += c * c2;
      vecs.push_back(SparseVec::from_dense(acc));
    }
    out.components[x] = rref(vecs);
    if (!out.components[x].empty()) out.support.push_back(x);
  }
  int total = 0;
  for (const auto& c : out.components) total += static_cast<int>(c.size());
  out.dims_add_up = (total == dim_r);

  // pi(R) = kT
  std::vector<SparseVec> pimg;
  for (const auto& v : r.basis) pimg.push_back(b.pi.apply(v));
  auto pr = rref(pimg);
  out.pi_image_is_group = true;
  std::vector<Perm> telems;
  for (const auto& row : pr) {
    if (row.terms.size() != 1) {
      out.pi_image_is_group = false;
      continue;
    }
    telems.push_back(b.mp.F.element(row.terms[0].first));
  }
  PermGroup tgrp = PermGroup::closure(b.mp.F.degree(), telems);
  if (tgrp.order() != pr.size()) out.pi_image_is_group = false;
  out.T = tgrp;

  out.support_gamma_stable = true;
  for (int x : out.support)
    for (int g = 0; g < ng; ++g)
      if (std::find(out.support.begin(), out.support.end(), b.mp.left[g][x]) ==
          out.support.end()) {
        out.support_gamma_stable = false;
        break;
      }

  // translation covariance: R_{g|>x} = (g ->) R_x
  out.translation_covariant = true;
  for (int x : out.support) {
    for (int g = 0; g < ng && out.translation_covariant; ++g) {
      int gx = b.mp.left[g][x];
      EchelonBasis target;
      for (const auto& v : out.components[gx]) target.insert(v);
      int matched = 0;
      for (const auto& v : out.components[x]) {
        // e_h # x -> e_{h g^{-1}} # (g |> x)
        std::vector<Scalar> acc(h.dim, Scalar::zero());
        for (const auto& [c, coef] : v.terms) {
          auto [hh, xx] = b.unindex(c);
          int h2 = b.mp.Gamma.index_of(b.mp.Gamma.element(hh) * b.mp.Gamma.element(g).inverse());
          acc[b.index(h2, gx)] += coef;
          (void)xx;
        }
        SparseVec w = SparseVec::from_dense(acc);
        if (!target.contains(w)) {
          out.translation_covariant = false;
          break;
        }
        ++matched;
      }
      if (out.components[x].size() != out.components[gx].size())
        out.translation_covariant = false;
      (void)matched;
    }
    if (!out.translation_covariant) break;
  }

  out.support_inverse_closed = true;
  for (int x : out.support) {
    int xi = b.mp.F.inverse_of(x);
    if (std::find(out.support.begin(), out.support.end(), xi) == out.support.end()) {
      out.support_inverse_closed = false;
      break;
    }
  }

  EchelonBasis reb;
  for (const auto& v : r.basis) reb.insert(v);
  out.contains_kgamma = true;
  for (int g = 0; g < ng; ++g)
    if (!reb.contains(b.embed_fn(g))) {
      out.contains_kgamma = false;
      break;
    }
  int one_f = b.mp.F.index_of(Perm::identity(b.mp.F.degree()));
  out.intersect_trivial = (out.components[one_f].size() == 1);

  if (out.contains_kgamma) {
    out.t_acts_trivially = true;
    for (const auto& x : out.T.elements()) {
      int xi = b.mp.F.index_of(x);
      for (int g = 0; g < ng; ++g)
        if (b.mp.right[g][xi] != g) {
          out.t_acts_trivially = false;
          break;
        }
      if (!out.t_acts_trivially) break;
    }
  }
  if (out.intersect_trivial) {
    out.t_stable = true;
    for (const auto& x : out.T.elements()) {
      int xi = b.mp.F.index_of(x);
      for (int g = 0; g < ng; ++g)
        if (!out.T.contains(b.mp.F.element(b.mp.left[g][xi]))) {
          out.t_stable = false;
          break;
        }
      if (!out.t_stable) break;
    }
  }
  return out;
}

}  // namespace qpa

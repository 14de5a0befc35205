#include "qpa/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace qpa {

namespace {

void tensor_add(Tensor2& t, int i, int j, const Scalar& c) {
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void tensor_cleanup(Tensor2& t) {
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

bool tensors_equal(Tensor2 a, Tensor2 b) {
  tensor_cleanup(a);
  tensor_cleanup(b);
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

Tensor2 tensor_outer(const SparseVec& u, const SparseVec& v) {
  Tensor2 t;
  for (const auto& [i, a] : u.terms)
    for (const auto& [j, b] : v.terms) tensor_add(t, i, j, a * b);
  return t;
}

}  // namespace

SparseVec HopfData::multiply(const SparseVec& a, const SparseVec& b) const {
  // single-term products copy the table entry directly
  if (a.terms.size() == 1 && b.terms.size() == 1) {
    const auto& [i, ca] = a.terms[0];
    const auto& [j, cb] = b.terms[0];
    Scalar c = ca * cb;
    return c.is_one() ? mult[i][j] : mult[i][j].scaled(c);
  }
  std::map<int, Scalar> acc;
  for (const auto& [i, ca] : a.terms)
    for (const auto& [j, cb] : b.terms) {
      if (mult[i][j].terms.empty()) continue;
      Scalar c = ca * cb;
      for (const auto& [k, m] : mult[i][j].terms) {
        auto it = acc.find(k);
        if (it == acc.end())
          acc.emplace(k, c * m);
        else
          it->second += c * m;
      }
    }
  SparseVec out;
  out.terms.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.terms.emplace_back(k, std::move(c));
  return out;
}

SparseVec HopfData::apply_antipode(const SparseVec& v) const {
  std::vector<Scalar> acc(dim, Scalar::zero());
  for (const auto& [i, c] : v.terms)
    for (const auto& [k, s] : antipode[i].terms) acc[k] += c * s;
  return SparseVec::from_dense(acc);
}

Tensor2 HopfData::comult_of(const SparseVec& v) const {
  Tensor2 t;
  for (const auto& [i, c] : v.terms)
    for (const auto& tr : comult[i]) tensor_add(t, tr.left, tr.right, c * tr.c);
  tensor_cleanup(t);
  return t;
}

Scalar HopfData::counit_of(const SparseVec& v) const {
  Scalar s = Scalar::zero();
  for (const auto& [i, c] : v.terms) s += c * counit[i];
  return s;
}

std::string HopfData::describe(const SparseVec& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.terms) {
    if (!first) os << " + ";
    if (!c.is_one()) os << "(" << c.str() << ")*";
    os << labels[i];
    first = false;
  }
  return os.str();
}

HopfReport verify_hopf(const HopfData& h) {
  HopfReport rep;
  int n = h.dim;
  auto note = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  rep.associative = true;
  for (int i = 0; i < n && rep.associative; ++i)
    for (int j = 0; j < n && rep.associative; ++j)
      for (int k = 0; k < n; ++k) {
        SparseVec l = h.multiply(h.mult[i][j], SparseVec::unit(k));
        SparseVec r = h.multiply(SparseVec::unit(i), h.mult[j][k]);
        if (!(l == r)) {
          rep.associative = false;
          note("associativity at (" + h.labels[i] + ", " + h.labels[j] + ", " + h.labels[k] + ")");
          break;
        }
      }

  rep.unital = true;
  for (int i = 0; i < n; ++i) {
    SparseVec e = SparseVec::unit(i);
    if (!(h.multiply(h.unit, e) == e) || !(h.multiply(e, h.unit) == e)) {
      rep.unital = false;
      note("unit fails at " + h.labels[i]);
      break;
    }
  }

  rep.coassociative = true;
  for (int i = 0; i < n && rep.coassociative; ++i) {
    std::map<std::tuple<int, int, int>, Scalar> l, r;
    for (const auto& t : h.comult[i]) {
      for (const auto& t2 : h.comult[t.left]) {
        auto key = std::make_tuple(t2.left, t2.right, t.right);
        l[key] += t.c * t2.c;
      }
      for (const auto& t2 : h.comult[t.right]) {
        auto key = std::make_tuple(t.left, t2.left, t2.right);
        r[key] += t.c * t2.c;
      }
    }
    for (auto& [k, v] : l)
      if (!(v == r[k])) {
        rep.coassociative = false;
        note("coassociativity at " + h.labels[i]);
        break;
      }
    if (rep.coassociative)
      for (auto& [k, v] : r)
        if (!(v == l[k])) {
          rep.coassociative = false;
          note("coassociativity at " + h.labels[i]);
          break;
        }
  }

  rep.counital = true;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> accl(n, Scalar::zero()), accr(n, Scalar::zero());
    for (const auto& t : h.comult[i]) {
      accl[t.right] += t.c * h.counit[t.left];
      accr[t.left] += t.c * h.counit[t.right];
    }
    SparseVec e = SparseVec::unit(i);
    if (!(SparseVec::from_dense(accl) == e) || !(SparseVec::from_dense(accr) == e)) {
      rep.counital = false;
      note("counit fails at " + h.labels[i]);
      break;
    }
  }

  rep.bialgebra = true;
  {
    Tensor2 du = h.comult_of(h.unit);
    if (!tensors_equal(du, tensor_outer(h.unit, h.unit))) {
      rep.bialgebra = false;
      note("Delta(1) != 1 (x) 1");
    }
    if (!(h.counit_of(h.unit) == Scalar::one())) {
      rep.bialgebra = false;
      note("eps(1) != 1");
    }
  }
  for (int i = 0; i < n && rep.bialgebra; ++i)
    for (int j = 0; j < n; ++j) {
      Tensor2 l = h.comult_of(h.mult[i][j]);
      Tensor2 r;
      for (const auto& t1 : h.comult[i])
        for (const auto& t2 : h.comult[j]) {
          Scalar c = t1.c * t2.c;
          const SparseVec& lv = h.mult[t1.left][t2.left];
          const SparseVec& rv = h.mult[t1.right][t2.right];
          for (const auto& [p, cp] : lv.terms)
            for (const auto& [q, cq] : rv.terms) tensor_add(r, p, q, c * cp * cq);
        }
      if (!tensors_equal(l, r)) {
        rep.bialgebra = false;
        note("Delta not multiplicative at (" + h.labels[i] + ", " + h.labels[j] + ")");
        break;
      }
      if (!(h.counit_of(h.mult[i][j]) == h.counit[i] * h.counit[j])) {
        rep.bialgebra = false;
        note("eps not multiplicative at (" + h.labels[i] + ", " + h.labels[j] + ")");
        break;
      }
    }

  rep.antipode_left = rep.antipode_right = true;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> accl(n, Scalar::zero()), accr(n, Scalar::zero());
    for (const auto& t : h.comult[i]) {
      SparseVec l = h.multiply(h.antipode[t.left], SparseVec::unit(t.right));
      SparseVec r = h.multiply(SparseVec::unit(t.left), h.antipode[t.right]);
      for (const auto& [k, c] : l.terms) accl[k] += t.c * c;
      for (const auto& [k, c] : r.terms) accr[k] += t.c * c;
    }
    SparseVec expect = h.unit.scaled(h.counit[i]);
    if (!(SparseVec::from_dense(accl) == expect)) {
      rep.antipode_left = false;
      note("left antipode axiom fails at " + h.labels[i]);
    }
    if (!(SparseVec::from_dense(accr) == expect)) {
      rep.antipode_right = false;
      note("right antipode axiom fails at " + h.labels[i]);
    }
    if (!rep.antipode_left || !rep.antipode_right) break;
  }

  rep.s_squared_identity = true;
  for (int i = 0; i < n; ++i)
    if (!(h.apply_antipode(h.antipode[i]) == SparseVec::unit(i))) {
      rep.s_squared_identity = false;
      note("S^2 != id at " + h.labels[i]);
      break;
    }

  rep.commutative = true;
  for (int i = 0; i < n && rep.commutative; ++i)
    for (int j = 0; j < i; ++j)
      if (!(h.mult[i][j] == h.mult[j][i])) {
        rep.commutative = false;
        break;
      }

  rep.cocommutative = true;
  for (int i = 0; i < n && rep.cocommutative; ++i) {
    Tensor2 t = h.comult_of(SparseVec::unit(i));
    Tensor2 flip;
    for (const auto& [k, c] : t) tensor_add(flip, k.second, k.first, c);
    if (!tensors_equal(t, flip)) rep.cocommutative = false;
  }

  return rep;
}

std::vector<SparseVec> solve_antipode(const HopfData& h, const std::vector<SparseVec>* guess) {
  int n = h.dim;
  auto axioms_hold = [&](const std::vector<SparseVec>& s) {
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> accl(n, Scalar::zero()), accr(n, Scalar::zero());
      for (const auto& t : h.comult[i]) {
        SparseVec l = h.multiply(s[t.left], SparseVec::unit(t.right));
        SparseVec r = h.multiply(SparseVec::unit(t.left), s[t.right]);
        for (const auto& [k, c] : l.terms) accl[k] += t.c * c;
        for (const auto& [k, c] : r.terms) accr[k] += t.c * c;
      }
      SparseVec expect = h.unit.scaled(h.counit[i]);
      if (!(SparseVec::from_dense(accl) == expect)) return false;
      if (!(SparseVec::from_dense(accr) == expect)) return false;
    }
    return true;
  };
  if (guess && guess->size() == static_cast<size_t>(n) && axioms_hold(*guess)) return *guess;

  // convolution power: (P * id)(b_i) = sum_{Delta_i} c * P(b_left) * b_right
  auto conv_with_id = [&](const std::vector<SparseVec>& p) {
    std::vector<SparseVec> q(n);
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> acc(n, Scalar::zero());
      for (const auto& t : h.comult[i]) {
        SparseVec prod = h.multiply(p[t.left], SparseVec::unit(t.right));
        for (const auto& [k, c] : prod.terms) acc[k] += t.c * c;
      }
      q[i] = SparseVec::from_dense(acc);
    }
    return q;
  };
  auto flatten = [&](const std::vector<SparseVec>& m, int tag) {
    SparseVec v;
    for (int i = 0; i < n; ++i)
      for (const auto& [k, c] : m[i].terms) v.terms.emplace_back(i * n + k, c);
    v.terms.emplace_back(n * n + tag, Scalar::one());
    return v;
  };

  std::vector<std::vector<SparseVec>> powers;
  {
    std::vector<SparseVec> e(n);  // u o eps
    for (int i = 0; i < n; ++i) e[i] = h.unit.scaled(h.counit[i]);
    powers.push_back(std::move(e));
  }
  {
    std::vector<SparseVec> id(n);
    for (int i = 0; i < n; ++i) id[i] = SparseVec::unit(i);
    powers.push_back(std::move(id));
  }

  EchelonBasis eb;
  eb.insert(flatten(powers[0], 0));
  SparseVec dep;
  int maxpow = n * n + 1;
  for (int k = 1; k <= maxpow; ++k) {
    SparseVec r = eb.reduce(flatten(powers[k], k));
    if (r.leading_index() >= n * n) {
      dep = r;
      break;
    }
    eb.insert(std::move(r));
    powers.push_back(conv_with_id(powers[k]));
  }
  if (dep.is_zero()) fail(Errc::InternalError, "no convolution dependency found");
  // dep encodes sum_t c_t id^{*t} = 0
  Scalar c0 = dep.coeff(n * n + 0);
  if (c0.is_zero()) fail(Errc::NoAntipode, "identity map is not convolution invertible");
  Scalar scale = -(c0.inverse());
  std::vector<std::vector<Scalar>> acc(n, std::vector<Scalar>(n, Scalar::zero()));
  for (const auto& [idx, c] : dep.terms) {
    if (idx < n * n) continue;
    int t = idx - n * n;
    if (t == 0) continue;
    Scalar f = scale * c;
    const auto& m = powers[t - 1];
    for (int i = 0; i < n; ++i)
      for (const auto& [k, v] : m[i].terms) acc[i][k] += f * v;
  }
  std::vector<SparseVec> s(n);
  for (int i = 0; i < n; ++i) s[i] = SparseVec::from_dense(acc[i]);
  if (!axioms_hold(s)) fail(Errc::NoAntipode, "convolution inverse fails an antipode axiom");
  return s;
}

SparseVec HopfMap::apply(const SparseVec& v) const {
  std::vector<Scalar> acc(target->dim, Scalar::zero());
  for (const auto& [i, c] : v.terms)
    for (const auto& [k, m] : matrix[i].terms) acc[k] += c * m;
  return SparseVec::from_dense(acc);
}

bool verify_hopf_map(const HopfMap& f, std::string* why) {
  const HopfData& a = *f.source;
  const HopfData& h = *f.target;
  auto explain = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (f.matrix.size() != static_cast<size_t>(a.dim)) return explain("matrix size mismatch");
  if (!(f.apply(a.unit) == h.unit)) return explain("unit not preserved");
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j)
      if (!(f.apply(a.mult[i][j]) == h.multiply(f.matrix[i], f.matrix[j])))
        return explain("multiplication not intertwined at (" + a.labels[i] + "," + a.labels[j] + ")");
    Tensor2 l;  // (f (x) f) Delta_a
    for (const auto& t : a.comult[i])
      for (const auto& [p, cp] : f.matrix[t.left].terms)
        for (const auto& [q, cq] : f.matrix[t.right].terms) tensor_add(l, p, q, t.c * cp * cq);
    Tensor2 r = h.comult_of(f.matrix[i]);
    if (!tensors_equal(l, r)) return explain("comultiplication not intertwined at " + a.labels[i]);
    if (!(h.counit_of(f.matrix[i]) == a.counit[i]))
      return explain("counit not intertwined at " + a.labels[i]);
    if (!(f.apply(a.antipode[i]) == h.apply_antipode(f.matrix[i])))
      return explain("antipode not intertwined at " + a.labels[i]);
  }
  return true;
}

HopfPtr dual_hopf(const HopfData& h) {
  auto d = std::make_shared<HopfData>();
  int n = h.dim;
  d->dim = n;
  d->labels.reserve(n);
  for (int i = 0; i < n; ++i) d->labels.push_back(h.labels[i] + "^");
  d->mult.assign(n, std::vector<SparseVec>(n));
  {
    std::vector<std::vector<std::vector<Scalar>>> acc(
        n, std::vector<std::vector<Scalar>>(n));  // lazily sized
    for (int k = 0; k < n; ++k)
      for (const auto& t : h.comult[k]) {
        auto& cell = acc[t.left][t.right];
        if (cell.empty()) cell.assign(n, Scalar::zero());
        cell[k] += t.c;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!acc[i][j].empty()) d->mult[i][j] = SparseVec::from_dense(acc[i][j]);
  }
  d->unit = SparseVec::from_dense(h.counit);
  d->comult.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : h.mult[i][j].terms) d->comult[k].push_back({i, j, c});
  d->counit.assign(n, Scalar::zero());
  for (const auto& [i, c] : h.unit.terms) d->counit[i] = c;
  d->antipode.assign(n, SparseVec{});
  for (int j = 0; j < n; ++j)
    for (const auto& [i, c] : h.antipode[j].terms)
      d->antipode[i] += SparseVec::unit(j, c);
  return d;
}

std::vector<SparseVec> coinvariants(const HopfData& h, const HopfMap& pi) {
  int n = h.dim;
  int m = pi.target->dim;
  // constraint rows indexed by (a, beta): sum_i x_i coeff = 0
  std::map<std::pair<int, int>, SparseVec> rows;
  auto row_add = [&](int a, int beta, int i, const Scalar& c) {
    rows[{a, beta}] += SparseVec::unit(i, c);
  };
  for (int i = 0; i < n; ++i) {
    for (const auto& t : h.comult[i]) {
      SparseVec img = pi.apply(SparseVec::unit(t.right));
      for (const auto& [beta, c] : img.terms) row_add(t.left, beta, i, t.c * c);
    }
    for (const auto& [beta, c] : pi.target->unit.terms) row_add(i, beta, i, -c);
  }
  std::vector<SparseVec> constraint;
  constraint.reserve(rows.size());
  for (auto& [k, v] : rows)
    if (!v.is_zero()) constraint.push_back(std::move(v));
  (void)m;
  return kernel_basis(constraint, n);
}

ExactSequenceReport verify_exact_sequence(const HopfData& a, const HopfData& h,
                                          const HopfMap& iota, const HopfMap& pi) {
  ExactSequenceReport rep;
  rep.iota_hopf_map = verify_hopf_map(iota);
  rep.pi_hopf_map = verify_hopf_map(pi);
  rep.iota_injective = rank_of(iota.matrix) == a.dim;
  rep.pi_surjective = rank_of(pi.matrix) == pi.target->dim;
  auto coinv = coinvariants(h, pi);
  EchelonBasis eb;
  for (const auto& v : coinv) eb.insert(v);
  rep.image_in_coinvariants = true;
  for (const auto& v : iota.matrix)
    if (!eb.contains(v)) {
      rep.image_in_coinvariants = false;
      break;
    }
  rep.coinvariants_dim_matches = (eb.rank() == a.dim);
  rep.dim_product = (a.dim * pi.target->dim == h.dim);
  return rep;
}

std::vector<SparseVec> subalgebra_span_growth(const HopfData& h,
                                              const std::vector<SparseVec>& seed) {
  EchelonBasis eb;
  eb.insert(h.unit);
  for (const auto& v : seed) eb.insert(v);
  while (true) {
    int before = eb.rank();
    std::vector<SparseVec> basis = eb.basis();
    for (const auto& u : basis)
      for (const auto& v : basis) eb.insert(h.multiply(u, v));
    if (eb.rank() == before) break;
  }
  return eb.basis();
}

bool is_grouplike(const HopfData& h, const SparseVec& v) {
  if (!(h.counit_of(v) == Scalar::one())) return false;
  return tensors_equal(h.comult_of(v), tensor_outer(v, v));
}

bool structure_equal(const HopfData& a, const HopfData& b) {
  if (a.dim != b.dim) return false;
  std::vector<int> id(a.dim);
  for (int i = 0; i < a.dim; ++i) id[i] = i;
  return structure_equal_under(a, b, id);
}

bool structure_equal_under(const HopfData& a, const HopfData& b, const std::vector<int>& map) {
  if (a.dim != b.dim) return false;
  auto mapped = [&](const SparseVec& v) {
    SparseVec r;
    for (const auto& [i, c] : v.terms) r += SparseVec::unit(map[i], c);
    return r;
  };
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (!(mapped(a.mult[i][j]) == b.mult[map[i]][map[j]])) return false;
  if (!(mapped(a.unit) == b.unit)) return false;
  for (int i = 0; i < a.dim; ++i) {
    Tensor2 l;
    for (const auto& t : a.comult[i]) tensor_add(l, map[t.left], map[t.right], t.c);
    Tensor2 r;
    for (const auto& t : b.comult[map[i]]) tensor_add(r, t.left, t.right, t.c);
    if (!tensors_equal(l, r)) return false;
    if (!(a.counit[i] == b.counit[map[i]])) return false;
    if (!(mapped(a.antipode[i]) == b.antipode[map[i]])) return false;
  }
  return true;
}

bool tensor_in_span_both(const HopfData& h, const Tensor2& t, const EchelonBasis& space) {
  // slice rows (fixed left index) must lie in the span, and slice columns too
  std::map<int, SparseVec> rows, cols;
  for (const auto& [k, c] : t) {
    rows[k.first] += SparseVec::unit(k.second, c);
    cols[k.second] += SparseVec::unit(k.first, c);
  }
  (void)h;
  for (const auto& [i, v] : rows)
    if (!space.contains(v)) return false;
  for (const auto& [j, v] : cols)
    if (!space.contains(v)) return false;
  return true;
}

HopfPtr extract_sub_hopf(const HopfData& h, const std::vector<SparseVec>& basis) {
  int m = static_cast<int>(basis.size());
  EchelonBasis eb;
  for (const auto& v : basis)
    if (!eb.insert(v)) fail(Errc::PreconditionViolated, "sub-Hopf basis is dependent");
  // coordinate solver against the given family
  EchelonBasis tagged;
  for (int i = 0; i < m; ++i) {
    SparseVec row = basis[i];
    row.terms.emplace_back(h.dim + i, Scalar::one());
    tagged.insert(std::move(row));
  }
  auto coords = [&](const SparseVec& v) {
    SparseVec r = tagged.reduce(v);
    std::vector<Scalar> out(m, Scalar::zero());
    for (const auto& [i, c] : r.terms) {
      if (i < h.dim) fail(Errc::PreconditionViolated, "sub-Hopf not closed: " + h.describe(v));
      out[i - h.dim] = -c;
    }
    return out;
  };
  auto sub = std::make_shared<HopfData>();
  sub->dim = m;
  for (int i = 0; i < m; ++i) sub->labels.push_back(h.describe(basis[i]));
  sub->mult.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub->mult[i][j] = SparseVec::from_dense(coords(h.multiply(basis[i], basis[j])));
  sub->unit = SparseVec::from_dense(coords(h.unit));
  sub->comult.assign(m, {});
  for (int i = 0; i < m; ++i) {
    Tensor2 t = h.comult_of(basis[i]);
    // two-pass leg resolution: first right leg slices by left ambient index,
    // then left coefficients of each sub-basis vector
    std::map<int, SparseVec> by_left;
    for (const auto& [key, c] : t) by_left[key.first] += SparseVec::unit(key.second, c);
    // Delta(v) = sum_a e_a (x) w_a with w_a = sum_j gamma_{a,j} v_j
    std::vector<SparseVec> left_of_j(m);  // sum_a gamma_{a,j} e_a
    for (const auto& [a, w] : by_left) {
      auto g = coords(w);
      for (int j = 0; j < m; ++j)
        if (!g[j].is_zero()) left_of_j[j] += SparseVec::unit(a, g[j]);
    }
    for (int j = 0; j < m; ++j) {
      if (left_of_j[j].is_zero()) continue;
      auto g = coords(left_of_j[j]);
      for (int i2 = 0; i2 < m; ++i2)
        if (!g[i2].is_zero()) sub->comult[i].push_back({i2, j, g[i2]});
    }
  }
  sub->counit.assign(m, Scalar::zero());
  for (int i = 0; i < m; ++i) sub->counit[i] = h.counit_of(basis[i]);
  sub->antipode.assign(m, SparseVec{});
  for (int i = 0; i < m; ++i)
    sub->antipode[i] = SparseVec::from_dense(coords(h.apply_antipode(basis[i])));
  return sub;
}

}  // namespace qpa

#include "qpa/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qpa {

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::QPA_certified:
      return "QPA_certified";
    case VerdictStatus::NOT_QPA_refuted:
      return "NOT_QPA_refuted";
    default:
      return "undecided";
  }
}

long group_exponent(const PermGroup& g) {
  long e = 1;
  for (const auto& p : g.elements()) e = lcm_long(e, p.order());
  return e;
}

namespace {

CoidealSub coideal_either_side(HopfPtr h, const std::vector<SparseVec>& basis) {
  try {
    return check_coideal_subalgebra(h, basis, CoidealSide::Left);
  } catch (const Error& e) {
    if (e.code() != Errc::NotCoideal) throw;
  }
  return check_coideal_subalgebra(h, basis, CoidealSide::Right);
}

std::string subgroup_string(const PermGroup& g) {
  std::ostringstream os;
  os << "<";
  auto gens = g.greedy_generators();
  if (gens.empty()) os << "id";
  for (size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].cycle_string();
  os << "> (order " << g.order() << ")";
  return os.str();
}

/// Fourier block over a group-like element of multiplicative order n, with
/// entries computed inside H directly.
MagicCert fourier_block_in(HopfPtr h, const SparseVec& grouplike) {
  std::vector<SparseVec> powers = {h->unit};
  SparseVec p = grouplike;
  while (!(p == h->unit)) {
    powers.push_back(p);
    p = h->multiply(p, grouplike);
    if (powers.size() > static_cast<size_t>(h->dim) + 1)
      fail(Errc::PreconditionViolated, "group-like element has unbounded order");
  }
  int n = static_cast<int>(powers.size());
  Rational inv_n(1, n);
  std::vector<std::vector<SparseVec>> entries(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> acc(h->dim, Scalar::zero());
      for (int k = 0; k < n; ++k) {
        Scalar c = Cyclotomic::root_power(n, k * (j - i)) * Cyclotomic(inv_n);
        for (const auto& [idx, v] : powers[k].terms) acc[idx] += c * v;
      }
      entries[i][j] = SparseVec::from_dense(acc);
    }
  return verify_magic(h, std::move(entries),
                      {"fourier block over a group-like of order " + std::to_string(n)});
}

}  // namespace

CentralPresentation central_presentation(const Bicrossed& b) {
  if (!b.mp.right_action_trivial())
    fail(Errc::PreconditionViolated, "central presentation needs a trivial right action");
  CentralPresentation p;
  p.H = b.H;
  p.k_gamma = b.k_gamma;
  p.iota = b.iota;
  p.k_f = b.k_f;
  p.pi = b.pi;
  p.lifts.resize(b.n_f());
  for (int x = 0; x < b.n_f(); ++x) p.lifts[x] = b.lift(x);
  long cocycle_conductor = 1;
  for (const auto& a : b.cocycles.sigma)
    for (const auto& r : a)
      for (const auto& c : r) cocycle_conductor = lcm_long(cocycle_conductor, c.conductor());
  p.exponent_bound =
      lcm_long(lcm_long(group_exponent(b.mp.Gamma), group_exponent(b.mp.F)), cocycle_conductor);
  return p;
}

CentralPresentation central_presentation(const DrinfeldDouble& d) {
  CentralPresentation p;
  p.H = d.Dstar;
  p.k_gamma = d.fun;
  p.iota = d.dstar_iota;
  p.k_f = d.grp;
  p.pi = d.dstar_pi;
  p.lifts.resize(d.n());
  for (int y = 0; y < d.n(); ++y) p.lifts[y] = d.dstar_lift(y);
  p.exponent_bound = group_exponent(d.G);
  return p;
}

Verdict certify_central(const CentralPresentation& p) {
  const HopfData& h = *p.H;
  // centrality of the embedded k^Gamma
  for (const auto& img : p.iota.matrix)
    for (int k = 0; k < h.dim; ++k) {
      SparseVec e = SparseVec::unit(k);
      if (!(h.multiply(img, e) == h.multiply(e, img)))
        fail(Errc::PreconditionViolated, "embedded function algebra is not central");
    }
  long ng = static_cast<long>(p.k_gamma.G.order());
  long nf = static_cast<long>(p.k_f.G.order());
  std::vector<MagicCert> blocks;
  CoidealSub la = coideal_either_side(p.H, p.iota.matrix);
  blocks.push_back(coideal_certificate(la, p.exponent_bound, "k^Gamma block"));
  std::vector<Perm> gens = p.k_f.G.greedy_generators();
  std::ostringstream deriv;
  long bound = ng;
  deriv << ng;
  for (const auto& x : gens) {
    // L^x = span{ iota(e_g) * lift(x^k) }
    std::vector<SparseVec> basis;
    Perm cur = Perm::identity(x.degree());
    do {
      const SparseVec& l = p.lifts[p.k_f.G.index_of(cur)];
      for (const auto& eg : p.iota.matrix) basis.push_back(h.multiply(eg, l));
      cur = cur * x;
    } while (!cur.is_identity());
    CoidealSub lx = coideal_either_side(p.H, basis);
    blocks.push_back(coideal_certificate(
        lx, p.exponent_bound, "L^x block for x = " + x.cycle_string()));
    bound += ng * x.order();
    deriv << " + " << ng << "*" << x.order();
  }
  MagicCert cert = block_compose(blocks);
  if (!cert.is_full_certificate)
    fail(Errc::GenerationFailure,
         "central certificate generated dimension " + std::to_string(cert.generated_dim));
  Verdict v;
  v.status = VerdictStatus::QPA_certified;
  v.method = "central";
  v.degree_bound = bound;
  std::ostringstream line;
  line << "degree " << cert.size << "; bound |Gamma| + sum |Gamma|*|x| = " << deriv.str() << " = "
       << bound << " <= |Gamma|*|F|^2 = " << ng * nf * nf;
  v.degree_derivation = line.str();
  cert.degree_bound_line = v.degree_derivation;
  v.certificate = std::move(cert);
  return v;
}

Verdict certify_split_abelian(const Bicrossed& b) {
  if (!b.split) fail(Errc::PreconditionViolated, "split certifier needs sigma = tau = 1");
  long ng = static_cast<long>(b.mp.Gamma.order());
  long nf = static_cast<long>(b.mp.F.order());
  auto stables = stable_subgroups(b.mp, SubgroupFilter::Abelian);
  PermGroup join = PermGroup::generated_subgroup(b.mp.F, stables);
  Verdict v;
  if (join.order() != b.mp.F.order()) {
    v.status = VerdictStatus::undecided;
    v.method = "split_abelian: criterion not met";
    v.refutation_log.push_back(
        {"abelian Gamma-stable subgroups generate F", false, subgroup_string(join)});
    return v;
  }
  // greedy cover by descending order
  std::sort(stables.begin(), stables.end(),
            [](const PermGroup& a, const PermGroup& c) { return a.order() > c.order(); });
  std::vector<PermGroup> cover;
  PermGroup cur = PermGroup::trivial(b.mp.F.degree());
  for (const auto& t : stables) {
    if (cur.order() == b.mp.F.order()) break;
    if (t.order() <= 1) continue;
    bool inside = true;
    for (const auto& e : t.elements())
      if (!cur.contains(e)) {
        inside = false;
        break;
      }
    if (inside) continue;
    cover.push_back(t);
    std::vector<PermGroup> parts = cover;
    cur = PermGroup::generated_subgroup(b.mp.F, parts);
  }
  long ebound = lcm_long(group_exponent(b.mp.Gamma), group_exponent(b.mp.F));
  std::vector<MagicCert> blocks;
  CoidealSub la = coideal_either_side(b.H, b.iota.matrix);
  blocks.push_back(coideal_certificate(la, ebound, "k^Gamma block"));
  for (const auto& t : cover) {
    CoidealSub r = construct_named_onekt(b, t);
    blocks.push_back(coideal_certificate(r, ebound, "1#kT block for T = " + subgroup_string(t)));
  }
  MagicCert cert = block_compose(blocks);
  if (!cert.is_full_certificate)
    fail(Errc::GenerationFailure,
         "split-abelian certificate generated dimension " + std::to_string(cert.generated_dim));
  // bound: |Gamma| + sum over 1 != x in union T_i of |T_{i(x)}|
  long bound = ng;
  std::set<Perm> seen;
  for (const auto& t : cover)
    for (const auto& x : t.elements()) {
      if (x.is_identity() || seen.count(x)) continue;
      seen.insert(x);
      bound += static_cast<long>(t.order());
    }
  v.status = VerdictStatus::QPA_certified;
  v.method = "split_abelian";
  v.degree_bound = bound;
  std::ostringstream line;
  line << "degree " << cert.size << "; bound dd(A) + sum_{1 != x in X} dim L^x = " << bound
       << " <= |Gamma|*|F|^2 = " << ng * nf * nf;
  v.degree_derivation = line.str();
  cert.degree_bound_line = v.degree_derivation;
  v.certificate = std::move(cert);
  return v;
}

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

Verdict refute_prime(const Bicrossed& b) {
  if (!b.split) fail(Errc::PreconditionViolated, "prime refuter needs a split extension");
  if (!is_prime(static_cast<long>(b.mp.Gamma.order())))
    fail(Errc::PreconditionViolated, "|Gamma| must be prime");
  Verdict v;
  v.method = "refute_prime";
  PermGroup kern = trivially_acting_kernel(b.mp);
  v.refutation_log.push_back({"the only subgroup of F acting trivially on Gamma is trivial",
                              kern.order() == 1, subgroup_string(kern)});
  auto stables = stable_subgroups(b.mp, SubgroupFilter::Abelian);
  PermGroup join = PermGroup::generated_subgroup(b.mp.F, stables);
  {
    std::ostringstream w;
    w << "subgroups:";
    for (const auto& t : stables) w << " " << subgroup_string(t) << ";";
    v.refutation_log.push_back({"enumerated all abelian Gamma-stable subgroups of F", true,
                                w.str()});
  }
  bool contained = true;
  for (const auto& t : stables)
    if (!t.is_subgroup_of(join)) contained = false;
  v.refutation_log.push_back({"every abelian Gamma-stable subgroup is contained in the join " +
                                  subgroup_string(join),
                              contained, ""});
  bool proper = join.order() < b.mp.F.order();
  v.refutation_log.push_back({"the join of the abelian Gamma-stable subgroups is a proper "
                              "subgroup of F",
                              proper,
                              subgroup_string(join) + " inside F of order " +
                                  std::to_string(b.mp.F.order())});
  if (kern.order() == 1 && proper && contained) {
    v.status = VerdictStatus::NOT_QPA_refuted;
  } else {
    v.status = VerdictStatus::undecided;
    v.refutation_log.push_back({"refutation criterion applies", false,
                                proper ? "kernel not trivial" : "join is all of F"});
  }
  return v;
}

Verdict refute_c4_s3(const Bicrossed& b) {
  if (!b.split) fail(Errc::StructureMismatch, "refuter needs a split extension");
  const auto& mp = b.mp;
  if (mp.Gamma.order() != 4 || !mp.Gamma.is_cyclic())
    fail(Errc::StructureMismatch, "Gamma is not cyclic of order 4");
  if (mp.F.order() != 6 || mp.F.is_abelian())
    fail(Errc::StructureMismatch, "F is not a symmetric group on 3 letters");
  Verdict v;
  v.method = "refute_c4_s3";
  // z: a generator of order 4; z2 its square
  Perm z = mp.Gamma.greedy_generators().front();
  if (z.order() != 4) fail(Errc::StructureMismatch, "no order-4 generator");
  int z2 = mp.Gamma.index_of(z * z);
  int one_f = mp.F.index_of(Perm::identity(mp.F.degree()));

  // (a) orbit structure of |>: {1}, {t}, {the four remaining}
  OrbitData orb = orbits_and_stabilizers(mp, ActionSide::LeftOnF);
  std::vector<size_t> sizes;
  for (const auto& o : orb.orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  int fixed_t = -1;
  std::vector<int> big_orbit;
  for (const auto& o : orb.orbits) {
    if (o.size() == 1 && o[0] != one_f) fixed_t = o[0];
    if (o.size() == 4) big_orbit = o;
  }
  bool orbits_ok = (sizes == std::vector<size_t>{1, 1, 4}) && fixed_t >= 0 &&
                   mp.F.element(fixed_t).order() == 2;
  {
    std::ostringstream w;
    for (const auto& o : orb.orbits) {
      w << "{";
      for (size_t i = 0; i < o.size(); ++i)
        w << (i ? ", " : "") << mp.F.element(o[i]).cycle_string();
      w << "} ";
    }
    v.refutation_log.push_back(
        {"the action of Gamma on F has orbits {1}, {t}, and one orbit of size 4", orbits_ok,
         w.str()});
  }
  if (!orbits_ok) fail(Errc::StructureMismatch, "orbit structure differs");

  // (b) Hopf subalgebras of k^Gamma have dimensions exactly 1, 2, 4
  {
    FunctionAlgebra kg = build_function_algebra(mp.Gamma);
    // enumerate set partitions of the 4 points; keep Delta-closed partition
    // subalgebras
    std::vector<int> dims_found;
    std::vector<std::vector<int>> assign;  // partition assignments
    std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& a, int i,
                                                               int blocks) {
      if (i == 4) {
        assign.push_back(a);
        return;
      }
      for (int c = 0; c <= blocks; ++c) {
        a.push_back(c);
        gen(a, i + 1, std::max(blocks, c + 1));
        a.pop_back();
      }
    };
    std::vector<int> a0;
    gen(a0, 0, 0);
    for (const auto& a : assign) {
      int nb = *std::max_element(a.begin(), a.end()) + 1;
      std::vector<SparseVec> vecs(nb);
      for (int i = 0; i < 4; ++i) vecs[a[i]] += SparseVec::unit(i);
      EchelonBasis eb;
      for (const auto& vv : vecs) eb.insert(vv);
      bool closed = true;
      for (const auto& vv : vecs)
        if (!tensor_in_span_both(*kg.H, kg.H->comult_of(vv), eb)) {
          closed = false;
          break;
        }
      if (closed && eb.contains(kg.H->unit)) dims_found.push_back(nb);
    }
    std::sort(dims_found.begin(), dims_found.end());
    bool ok = (dims_found == std::vector<int>{1, 2, 4});
    std::ostringstream w;
    for (int d : dims_found) w << d << " ";
    v.refutation_log.push_back(
        {"the Hopf subalgebras of k^Gamma have dimensions exactly 1, 2, 4", ok, w.str()});
    if (!ok) fail(Errc::StructureMismatch, "Hopf subalgebra lattice of k^Gamma differs");
  }

  // (c) stabilizer of z^2 under <| is <t>
  PermGroup stab = point_stabilizer(mp, ActionSide::RightOnGamma, z2);
  PermGroup tgrp = PermGroup::closure(mp.F.degree(), {mp.F.element(fixed_t)});
  bool stab_ok = stab.elements() == tgrp.elements();
  v.refutation_log.push_back(
      {"the stabilizer of z^2 under the right action is <t>", stab_ok, subgroup_string(stab)});
  if (!stab_ok) fail(Errc::StructureMismatch, "stabilizer of z^2 differs");

  // (d) per x in the 4-orbit: z^2 <| x^{-1} != z^2 (so the z^2 value of any
  // commuting coefficient vanishes) and z^2 |> x stays in the 4-orbit
  bool d1 = true, d2 = true;
  std::ostringstream w1, w2;
  for (int x : big_orbit) {
    int xi = mp.F.inverse_of(x);
    if (mp.right[z2][xi] == z2) {
      d1 = false;
      w1 << mp.F.element(x).cycle_string() << " fixes z^2; ";
    }
    int img = mp.left[z2][x];
    if (std::find(big_orbit.begin(), big_orbit.end(), img) == big_orbit.end()) {
      d2 = false;
      w2 << mp.F.element(x).cycle_string() << " leaves the orbit; ";
    }
  }
  v.refutation_log.push_back(
      {"for every x in the 4-orbit, z^2 <| x^{-1} != z^2 (forces f(z^2) = 0)", d1, w1.str()});
  v.refutation_log.push_back(
      {"for every x in the 4-orbit, z^2 |> x lies in the 4-orbit, hence outside <t>", d2,
       w2.str()});

  // group-likes and the final containment cross-check
  GrouplikeData gl = grouplikes_split(b);
  bool gl_ok = gl.elements.size() == 8 && gl.closed_group;
  v.refutation_log.push_back(
      {"G(H) has exactly 8 elements and forms a group", gl_ok,
       "count " + std::to_string(gl.elements.size())});
  CoidealSub kgh = construct_named_kgh(b);
  EchelonBasis kgh_span;
  for (const auto& e : kgh.basis) kgh_span.insert(e);
  bool contained = true;
  for (const auto& t : stable_subgroups(b.mp, SubgroupFilter::Abelian)) {
    CoidealSub r = construct_named_onekt(b, t);
    for (const auto& e : r.basis)
      if (!kgh_span.contains(e)) contained = false;
  }
  v.refutation_log.push_back(
      {"every named commutative right coideal subalgebra lies inside kG(H)", contained, ""});
  bool all = d1 && d2 && gl_ok && contained;
  v.refutation_log.push_back(
      {"every commutative right coideal subalgebra of H is contained in kG(H)", all,
       "assembled from the checks above"});
  if (!all) fail(Errc::StructureMismatch, "refutation steps failed");
  v.status = VerdictStatus::NOT_QPA_refuted;

  // envelope: kG(H)
  EnvelopeInfo env;
  env.basis = kgh.basis;
  env.dim = kgh.dim();
  HopfPtr sub = extract_sub_hopf(*b.H, gl.elements);
  HopfReport sr = verify_hopf(*sub);
  env.cocommutative = sr.cocommutative;
  env.grouplike_count = static_cast<int>(gl.elements.size());
  env.grouplike_table = gl.table;
  env.description = "kG(H), dimension " + std::to_string(env.dim);
  v.envelope = std::move(env);
  return v;
}

Verdict envelope_split_prime(const Bicrossed& b) {
  if (!b.split) fail(Errc::PreconditionViolated, "envelope needs a split extension");
  if (!is_prime(static_cast<long>(b.mp.Gamma.order())))
    fail(Errc::PreconditionViolated, "|Gamma| must be prime");
  PermGroup fprime = trivially_acting_kernel(b.mp);
  auto stables = stable_subgroups(b.mp, SubgroupFilter::Abelian);
  PermGroup fsecond = PermGroup::generated_subgroup(b.mp.F, stables);
  std::vector<PermGroup> both = {fprime, fsecond};
  PermGroup f0 = PermGroup::generated_subgroup(b.mp.F, both);
  // span growth over the union of the two sub-bicrossed bases
  std::vector<SparseVec> seed;
  for (const auto& grp : both)
    for (const auto& x : grp.elements()) {
      int xi = b.mp.F.index_of(x);
      for (int g = 0; g < b.n_gamma(); ++g) seed.push_back(SparseVec::unit(b.index(g, xi)));
    }
  auto env_basis = subalgebra_span_growth(*b.H, seed);
  // the result must be the sub-bicrossed product over <F', F''>
  EchelonBasis eb;
  for (const auto& e : env_basis) eb.insert(e);
  for (const auto& x : f0.elements()) {
    int xi = b.mp.F.index_of(x);
    for (int g = 0; g < b.n_gamma(); ++g)
      if (!eb.contains(SparseVec::unit(b.index(g, xi))))
        fail(Errc::InternalError, "envelope span mismatch");
  }
  if (static_cast<long>(env_basis.size()) !=
      static_cast<long>(b.n_gamma()) * static_cast<long>(f0.order()))
    fail(Errc::InternalError, "envelope dimension mismatch");
  // Hopf subalgebra checks
  for (const auto& e : env_basis) {
    if (!eb.contains(b.H->apply_antipode(e)))
      fail(Errc::InternalError, "envelope not antipode stable");
    if (!tensor_in_span_both(*b.H, b.H->comult_of(e), eb))
      fail(Errc::InternalError, "envelope is not a subcoalgebra");
  }
  MatchedPair sub_mp = restrict_matched_pair(b.mp, f0);
  Bicrossed sub = build_bicrossed_split(sub_mp);
  GrouplikeData gl = grouplikes_split(sub);
  HopfReport rep = verify_hopf(*sub.H);

  Verdict v;
  v.method = "envelope_split_prime";
  v.status = VerdictStatus::undecided;
  EnvelopeInfo env;
  env.basis = env_basis;
  env.dim = static_cast<int>(env_basis.size());
  env.cocommutative = rep.cocommutative;
  env.grouplike_count = static_cast<int>(gl.elements.size());
  env.grouplike_table = gl.table;
  std::ostringstream d;
  d << "k^Gamma # k" << subgroup_string(f0) << " from F' = " << subgroup_string(fprime)
    << " and F'' = " << subgroup_string(fsecond);
  if (env.grouplike_count == env.dim) d << "; equals kG(H_qp)";
  env.description = d.str();
  v.envelope = std::move(env);
  // maximality against the named constructions
  for (const auto& t : stables) {
    CoidealSub r = construct_named_onekt(b, t);
    for (const auto& e : r.basis)
      if (!eb.contains(e)) fail(Errc::InternalError, "named coideal escapes the envelope");
  }
  return v;
}

MagicCert certify_commutative(HopfPtr h, long exponent_bound) {
  std::vector<SparseVec> all;
  for (int i = 0; i < h->dim; ++i) all.push_back(SparseVec::unit(i));
  CoidealSub l = check_coideal_subalgebra(h, all, CoidealSide::Left);
  if (!l.commutative) fail(Errc::PreconditionViolated, "algebra is not commutative");
  if (!l.separable) fail(Errc::PreconditionViolated, "algebra is not separable");
  MagicCert cert = coideal_certificate(l, exponent_bound, "cayley-type, L = H");
  if (!cert.is_full_certificate)
    fail(Errc::GenerationFailure, "commutative certificate must be full");
  cert.degree_bound_line = "degree " + std::to_string(cert.size) + " = dim H";
  return cert;
}

std::optional<MagicCert> certify_cocommutative_basis(HopfPtr h) {
  for (int i = 0; i < h->dim; ++i)
    if (!is_grouplike(*h, SparseVec::unit(i))) return std::nullopt;
  // basis group table
  std::vector<std::vector<int>> table(h->dim, std::vector<int>(h->dim, -1));
  for (int i = 0; i < h->dim; ++i)
    for (int j = 0; j < h->dim; ++j) {
      const SparseVec& p = h->mult[i][j];
      if (p.terms.size() != 1 || !p.terms[0].second.is_one()) return std::nullopt;
      table[i][j] = p.terms[0].first;
    }
  // greedy generators by descending order
  auto order_of = [&](int x) {
    // identity index
    int e = -1;
    for (int i = 0; i < h->dim; ++i) {
      bool id = true;
      for (int j = 0; j < h->dim; ++j)
        if (table[i][j] != j) id = false;
      if (id) e = i;
    }
    int y = x, o = 1;
    while (y != e) {
      y = table[y][x];
      ++o;
    }
    return o;
  };
  std::vector<int> idx(h->dim);
  for (int i = 0; i < h->dim; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b2) {
    int oa = order_of(a), ob = order_of(b2);
    if (oa != ob) return oa > ob;
    return a < b2;
  });
  std::vector<int> gens;
  std::set<int> span = {};
  auto regenerate = [&](const std::vector<int>& gs) {
    std::set<int> s;
    int e = -1;
    for (int i = 0; i < h->dim; ++i) {
      bool id = true;
      for (int j = 0; j < h->dim; ++j)
        if (table[i][j] != j) id = false;
      if (id) e = i;
    }
    s.insert(e);
    std::vector<int> frontier = {e};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int g : gs) {
          int y = table[x][g];
          if (s.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return s;
  };
  span = regenerate({});
  for (int cand : idx) {
    if (static_cast<int>(span.size()) == h->dim) break;
    if (span.count(cand)) continue;
    gens.push_back(cand);
    span = regenerate(gens);
  }
  std::vector<MagicCert> blocks;
  for (int g : gens) blocks.push_back(fourier_block_in(h, SparseVec::unit(g)));
  if (blocks.empty()) blocks.push_back(fourier_block_in(h, h->unit));
  MagicCert cert = block_compose(blocks);
  if (!cert.is_full_certificate)
    fail(Errc::GenerationFailure, "fourier blocks over a generating set must generate");
  return cert;
}

Verdict full_pipeline_plain(HopfPtr h, long exponent_bound) {
  HopfReport rep = verify_hopf(*h);
  Verdict v;
  if (!rep.all_axioms() || !rep.s_squared_identity) {
    v.method = "rejected: " + (rep.first_failure.empty() ? "S^2 != id" : rep.first_failure);
    return v;
  }
  if (rep.commutative) {
    v.status = VerdictStatus::QPA_certified;
    v.method = "commutative";
    v.certificate = certify_commutative(h, exponent_bound);
    v.degree_bound = v.certificate->size;
    v.degree_derivation = v.certificate->degree_bound_line;
    return v;
  }
  if (rep.cocommutative) {
    auto cert = certify_cocommutative_basis(h);
    if (cert) {
      v.status = VerdictStatus::QPA_certified;
      v.method = "cocommutative (fourier blocks)";
      v.degree_bound = cert->size;
      v.degree_derivation = "degree " + std::to_string(cert->size) + " = sum of block orders";
      v.certificate = std::move(cert);
      return v;
    }
  }
  v.method = "undecided: no applicable certifier for a plain algebra";
  return v;
}

Verdict full_pipeline(const Bicrossed& b) {
  HopfReport rep = verify_hopf(*b.H);
  Verdict v;
  if (!rep.all_axioms() || !rep.s_squared_identity) {
    v.method = "rejected: " + (rep.first_failure.empty() ? "S^2 != id" : rep.first_failure);
    return v;
  }
  long ebound = lcm_long(group_exponent(b.mp.Gamma), group_exponent(b.mp.F));
  for (const auto& a : b.cocycles.sigma)
    for (const auto& r : a)
      for (const auto& c : r) ebound = lcm_long(ebound, c.conductor());
  if (rep.commutative) {
    v.status = VerdictStatus::QPA_certified;
    v.method = "commutative";
    v.certificate = certify_commutative(b.H, ebound);
    v.degree_bound = v.certificate->size;
    v.degree_derivation = v.certificate->degree_bound_line;
    return v;
  }
  if (rep.cocommutative) {
    auto cert = certify_cocommutative_basis(b.H);
    if (cert) {
      v.status = VerdictStatus::QPA_certified;
      v.method = "cocommutative (fourier blocks)";
      v.degree_bound = cert->size;
      v.degree_derivation = "degree " + std::to_string(cert->size) + " = sum of block orders";
      v.certificate = std::move(cert);
      return v;
    }
  }
  if (b.mp.right_action_trivial()) {
    Verdict c = certify_central(central_presentation(b));
    return c;
  }
  if (b.split) {
    Verdict c = certify_split_abelian(b);
    if (c.status == VerdictStatus::QPA_certified) return c;
    if (is_prime(static_cast<long>(b.mp.Gamma.order()))) {
      Verdict r = refute_prime(b);
      if (r.status == VerdictStatus::NOT_QPA_refuted) {
        Verdict env = envelope_split_prime(b);
        r.envelope = env.envelope;
        return r;
      }
    }
    try {
      Verdict r = refute_c4_s3(b);
      if (r.status == VerdictStatus::NOT_QPA_refuted) return r;
    } catch (const Error& e) {
      if (e.code() != Errc::StructureMismatch) throw;
    }
    if (is_prime(static_cast<long>(b.mp.Gamma.order()))) {
      Verdict env = envelope_split_prime(b);
      env.method = "undecided; envelope attached";
      return env;
    }
  }
  v.method = "undecided: no applicable certifier or refuter";
  return v;
}

Verdict compute_envelope(const Bicrossed& b) {
  if (b.split && is_prime(static_cast<long>(b.mp.Gamma.order()))) return envelope_split_prime(b);
  try {
    Verdict r = refute_c4_s3(b);
    r.method = "envelope via the C4/S3 analysis";
    return r;
  } catch (const Error& e) {
    if (e.code() != Errc::StructureMismatch) throw;
  }
  Verdict v;
  v.method = "envelope not computable for this input";
  return v;
}

bool replay_refutation(const Bicrossed& b, const Verdict& v) {
  Verdict again;
  if (v.method == "refute_prime")
    again = refute_prime(b);
  else if (v.method == "refute_c4_s3" || v.method == "envelope via the C4/S3 analysis")
    again = refute_c4_s3(b);
  else
    return false;
  if (again.refutation_log.size() != v.refutation_log.size()) return false;
  for (size_t i = 0; i < again.refutation_log.size(); ++i) {
    if (again.refutation_log[i].assertion != v.refutation_log[i].assertion) return false;
    if (!again.refutation_log[i].holds) return false;
  }
  return true;
}

}  // namespace qpa

#include "qpa/matched_pair.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qpa {

bool MatchedPair::left_action_trivial() const {
  for (size_t g = 0; g < Gamma.order(); ++g)
    for (size_t x = 0; x < F.order(); ++x)
      if (left[g][x] != static_cast<int>(x)) return false;
  return true;
}

bool MatchedPair::right_action_trivial() const {
  for (size_t g = 0; g < Gamma.order(); ++g)
    for (size_t x = 0; x < F.order(); ++x)
      if (right[g][x] != static_cast<int>(g)) return false;
  return true;
}

std::vector<int> MatchedPair::left_fixed_points() const {
  std::vector<int> out;
  for (size_t x = 0; x < F.order(); ++x) {
    bool fixed = true;
    for (size_t g = 0; g < Gamma.order(); ++g)
      if (left[g][x] != static_cast<int>(x)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(static_cast<int>(x));
  }
  return out;
}

std::string MatchedPair::action_table_csv() const {
  std::ostringstream os;
  os << "g\\x";
  for (size_t x = 0; x < F.order(); ++x) os << "," << F.element(x).cycle_string();
  os << "\n";
  for (size_t g = 0; g < Gamma.order(); ++g) {
    os << Gamma.element(g).cycle_string();
    for (size_t x = 0; x < F.order(); ++x)
      os << "," << F.element(left[g][x]).cycle_string() << " | "
         << Gamma.element(right[g][x]).cycle_string();
    os << "\n";
  }
  return os.str();
}

MatchedPair derive_matched_pair(const PermGroup& G, const PermGroup& F, const PermGroup& Gamma) {
  if (!F.is_subgroup_of(G) || !Gamma.is_subgroup_of(G))
    fail(Errc::PreconditionViolated, "factors must be subgroups of the ambient group");
  // exact factorization: trivial intersection and order product
  for (const auto& x : F.elements())
    if (!x.is_identity() && Gamma.contains(x))
      fail(Errc::NotExactFactorization, "F and Gamma intersect nontrivially at " + x.cycle_string());
  if (F.order() * Gamma.order() != G.order())
    fail(Errc::NotExactFactorization,
         "|F|*|Gamma| = " + std::to_string(F.order() * Gamma.order()) + " but |G| = " +
             std::to_string(G.order()));
  MatchedPair mp;
  mp.G = G;
  mp.F = F;
  mp.Gamma = Gamma;
  size_t nG = Gamma.order(), nF = F.order();
  mp.left.assign(nG, std::vector<int>(nF, -1));
  mp.right.assign(nG, std::vector<int>(nF, -1));
  for (size_t g = 0; g < nG; ++g) {
    for (size_t x = 0; x < nF; ++x) {
      Perm gx = Gamma.element(g) * F.element(x);
      bool found = false;
      for (size_t f = 0; f < nF; ++f) {
        Perm rest = F.element(f).inverse() * gx;
        int gi = Gamma.index_of(rest);
        if (gi >= 0) {
          mp.left[g][x] = static_cast<int>(f);
          mp.right[g][x] = gi;
          found = true;
          break;
        }
      }
      if (!found)
        fail(Errc::NotExactFactorization,
             "product " + gx.cycle_string() + " has no F.Gamma factorization");
    }
  }
  // compatibility conditions, exhaustively
  for (size_t s = 0; s < nG; ++s) {
    for (size_t x = 0; x < nF; ++x) {
      // round trip (s|>x)(s<|x) = s x
      Perm lhs = F.element(mp.left[s][x]) * Gamma.element(mp.right[s][x]);
      if (!(lhs == Gamma.element(s) * F.element(x)))
        fail(Errc::CompatibilityFailure, "factorization round-trip failed");
      for (size_t y = 0; y < nF; ++y) {
        // s |> (xy) = (s|>x)((s<|x)|>y)
        int xy = F.index_of(F.element(x) * F.element(y));
        int l1 = mp.left[s][xy];
        int l2 = F.index_of(F.element(mp.left[s][x]) * F.element(mp.left[mp.right[s][x]][y]));
        if (l1 != l2) fail(Errc::CompatibilityFailure, "left compatibility failed");
      }
      for (size_t t = 0; t < nG; ++t) {
        // (st) <| x = (s <| (t|>x))(t <| x)
        int st = Gamma.index_of(Gamma.element(s) * Gamma.element(t));
        int r1 = mp.right[st][x];
        int r2 = Gamma.index_of(Gamma.element(mp.right[s][mp.left[t][x]]) *
                                Gamma.element(mp.right[t][x]));
        if (r1 != r2) fail(Errc::CompatibilityFailure, "right compatibility failed");
      }
    }
  }
  return mp;
}

OrbitData orbits_and_stabilizers(const MatchedPair& mp, ActionSide side) {
  size_t npts = (side == ActionSide::LeftOnF) ? mp.F.order() : mp.Gamma.order();
  size_t nact = (side == ActionSide::LeftOnF) ? mp.Gamma.order() : mp.F.order();
  auto image = [&](int pt, int actor) {
    return (side == ActionSide::LeftOnF) ? mp.left[actor][pt] : mp.right[pt][actor];
  };
  OrbitData out;
  std::vector<bool> seen(npts, false);
  for (size_t p = 0; p < npts; ++p) {
    if (seen[p]) continue;
    std::set<int> orbit = {static_cast<int>(p)};
    std::vector<int> frontier = {static_cast<int>(p)};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int q : frontier)
        for (size_t a = 0; a < nact; ++a) {
          int r = image(q, static_cast<int>(a));
          if (orbit.insert(r).second) next.push_back(r);
        }
      frontier = std::move(next);
    }
    for (int q : orbit) seen[q] = true;
    out.orbits.emplace_back(orbit.begin(), orbit.end());
    out.stabilizers.push_back(point_stabilizer(mp, side, static_cast<int>(p)));
  }
  return out;
}

PermGroup point_stabilizer(const MatchedPair& mp, ActionSide side, int point_index) {
  std::vector<Perm> stab;
  if (side == ActionSide::LeftOnF) {
    for (size_t g = 0; g < mp.Gamma.order(); ++g)
      if (mp.left[g][point_index] == point_index) stab.push_back(mp.Gamma.element(g));
    return PermGroup::closure(mp.Gamma.degree(), stab);
  }
  for (size_t x = 0; x < mp.F.order(); ++x)
    if (mp.right[point_index][x] == point_index) stab.push_back(mp.F.element(x));
  return PermGroup::closure(mp.F.degree(), stab);
}

std::vector<PermGroup> stable_subgroups(const MatchedPair& mp, SubgroupFilter filter) {
  std::vector<PermGroup> out;
  for (auto& t : mp.F.subgroups(filter)) {
    bool stable = true;
    for (size_t g = 0; g < mp.Gamma.order() && stable; ++g)
      for (const auto& x : t.elements()) {
        int xi = mp.F.index_of(x);
        if (!t.contains(mp.F.element(mp.left[g][xi]))) {
          stable = false;
          break;
        }
      }
    if (stable) out.push_back(std::move(t));
  }
  return out;
}

PermGroup trivially_acting_kernel(const MatchedPair& mp) {
  std::vector<Perm> kern;
  for (size_t x = 0; x < mp.F.order(); ++x) {
    bool trivial = true;
    for (size_t g = 0; g < mp.Gamma.order(); ++g)
      if (mp.right[g][x] != static_cast<int>(g)) {
        trivial = false;
        break;
      }
    if (trivial) kern.push_back(mp.F.element(x));
  }
  return PermGroup::closure(mp.F.degree(), kern);
}

MatchedPair restrict_matched_pair(const MatchedPair& mp, const PermGroup& f_prime) {
  if (!f_prime.is_subgroup_of(mp.F))
    fail(Errc::PreconditionViolated, "restriction target is not a subgroup of F");
  // Gamma' = {g : g |> F' = F'}
  std::vector<Perm> gprime;
  for (size_t g = 0; g < mp.Gamma.order(); ++g) {
    bool stable = true;
    for (const auto& x : f_prime.elements()) {
      int xi = mp.F.index_of(x);
      if (!f_prime.contains(mp.F.element(mp.left[g][xi]))) {
        stable = false;
        break;
      }
    }
    if (stable) gprime.push_back(mp.Gamma.element(g));
  }
  PermGroup gamma_p = PermGroup::closure(mp.Gamma.degree(), gprime);
  std::vector<Perm> ggens;
  for (const auto& p : f_prime.elements()) ggens.push_back(p);
  for (const auto& p : gamma_p.elements()) ggens.push_back(p);
  PermGroup g_small = PermGroup::closure(mp.G.degree(), ggens);
  return derive_matched_pair(g_small, f_prime, gamma_p);
}

}  // namespace qpa

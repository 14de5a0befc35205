#include "qpa/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qpa {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      fail(Errc::PreconditionViolated, "not a bijection in one-line notation");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[o.img_[i]];
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int o = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++o;
  }
  return o;
}

Perm Perm::parse_cycles(const std::string& s, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (s.substr(pos, 2) == "id" || pos == s.size() || s == "()" || s == "1") return Perm(img);
  while (pos < s.size()) {
    skip_ws();
    if (pos >= s.size()) break;
    if (s[pos] != '(') fail(Errc::ParseError, "expected '(' in cycle notation: " + s);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      size_t start = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail(Errc::ParseError, "expected point in cycle notation: " + s);
      int pt = std::stoi(s.substr(start, pos - start));
      if (pt < 1 || pt > degree)
        fail(Errc::ParseError, "point " + std::to_string(pt) + " out of range for degree " +
                                   std::to_string(degree));
      cyc.push_back(pt - 1);
    }
    for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
  int n = degree();
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
      j = img_[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "id";
}

PermGroup PermGroup::trivial(int degree) { return closure(degree, {}); }

PermGroup PermGroup::closure(int degree, std::vector<Perm> generators, std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) fail(Errc::PreconditionViolated, "generator degree mismatch");
  std::set<Perm> elems;
  std::vector<Perm> frontier;
  Perm e = Perm::identity(degree);
  elems.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Perm q = p * g;
        if (elems.insert(q).second) {
          if (elems.size() > cap)
            fail(Errc::OrderLimitExceeded,
                 "group order exceeds cap " + std::to_string(cap));
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  PermGroup out;
  out.degree_ = degree;
  out.gens_ = std::move(generators);
  out.elems_.assign(elems.begin(), elems.end());
  return out;
}

const Perm& PermGroup::identity_element() const { return elems_[index_of(Perm::identity(degree_))]; }

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elems_.begin());
}

bool PermGroup::is_abelian() const {
  for (const auto& a : elems_)
    for (const auto& b : elems_)
      if (!(a * b == b * a)) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  for (const auto& a : elems_)
    if (static_cast<std::size_t>(a.order()) == order()) return true;
  return false;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const auto& a : elems_)
    if (!g.contains(a)) return false;
  return true;
}

namespace {

std::vector<Perm> join_elements(int degree, const std::vector<Perm>& a, const std::vector<Perm>& b,
                                std::size_t cap) {
  std::vector<Perm> gens = a;
  gens.insert(gens.end(), b.begin(), b.end());
  return PermGroup::closure(degree, gens, cap).elements();
}

}  // namespace

std::vector<PermGroup> PermGroup::subgroups(SubgroupFilter filter, std::size_t cap) const {
  if (order() > cap) fail(Errc::OrderLimitExceeded, "subgroup enumeration past cap");
  std::set<std::vector<Perm>> found;
  std::vector<std::vector<Perm>> cyclics;
  for (const auto& a : elems_) {
    auto c = closure(degree_, {a}, cap).elements();
    if (found.insert(c).second) cyclics.push_back(c);
  }
  std::set<std::vector<Perm>> all = found;
  std::vector<std::vector<Perm>> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Perm>> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclics) {
        auto j = join_elements(degree_, h, c, cap);
        if (j.size() > order()) continue;  // cannot happen inside the parent, guard anyway
        if (all.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<PermGroup> out;
  for (const auto& e : all) {
    PermGroup h;
    h.degree_ = degree_;
    h.elems_ = e;
    h.gens_ = e;  // elements as generators: simple and valid
    if (filter == SubgroupFilter::Abelian && !h.is_abelian()) continue;
    if (filter == SubgroupFilter::Cyclic && !h.is_cyclic()) continue;
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& x, const PermGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return out;
}

PermGroup PermGroup::generated_subgroup(const PermGroup& g, const std::vector<PermGroup>& parts) {
  std::vector<Perm> gens;
  for (const auto& p : parts) {
    if (!p.is_subgroup_of(g)) fail(Errc::PreconditionViolated, "part not inside parent group");
    gens.insert(gens.end(), p.elements().begin(), p.elements().end());
  }
  return closure(g.degree(), gens, g.order());
}

std::vector<Perm> PermGroup::greedy_generators() const {
  std::vector<Perm> sorted = elems_;
  std::sort(sorted.begin(), sorted.end(), [](const Perm& a, const Perm& b) {
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa > ob;
    return a < b;
  });
  std::vector<Perm> gens;
  PermGroup cur = trivial(degree_);
  for (const auto& p : sorted) {
    if (cur.order() == order()) break;
    if (cur.contains(p)) continue;
    gens.push_back(p);
    std::vector<Perm> g2 = gens;
    cur = closure(degree_, g2, order());
  }
  return gens;
}

std::vector<Character> characters(const PermGroup& g) {
  const std::vector<Perm> gens = g.greedy_generators();
  std::vector<int> orders;
  for (const auto& gen : gens) orders.push_back(gen.order());
  long conductor = 1;
  for (int o : orders) conductor = lcm_long(conductor, o);
  int n = static_cast<int>(g.order());
  std::vector<Character> out;
  // odometer over exponent tuples; value of generator i is zeta_{o_i}^{k_i}
  std::vector<int> k(orders.size(), 0);
  while (true) {
    // propagate: BFS from identity assigning chi on the closure graph
    std::vector<Cyclotomic> val(n);
    std::vector<bool> set(n, false);
    int idx1 = g.index_of(Perm::identity(g.degree()));
    val[idx1] = Cyclotomic::one();
    set[idx1] = true;
    std::vector<int> frontier = {idx1};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<int> next;
      for (int e : frontier) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          int e2 = g.index_of(g.element(e) * gens[gi]);
          Cyclotomic v = val[e] * Cyclotomic::root_power(orders[gi], k[gi]);
          if (!set[e2]) {
            val[e2] = v;
            set[e2] = true;
            next.push_back(e2);
          } else if (val[e2] != v) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      frontier = std::move(next);
    }
    if (ok) {
      // consistency on all pairs (needed when the BFS tree misses relations)
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (val[g.multiply(i, j)] != val[i] * val[j]) ok = false;
    }
    if (ok) out.push_back(Character{val});
    // advance odometer
    size_t pos = 0;
    while (pos < k.size()) {
      if (++k[pos] < orders[pos]) break;
      k[pos] = 0;
      ++pos;
    }
    if (pos == k.size()) break;
  }
  // dedupe (different exponent tuples can induce the same character) and sort
  std::sort(out.begin(), out.end(), [](const Character& a, const Character& b) {
    for (size_t i = 0; i < a.values.size(); ++i) {
      if (a.values[i] == b.values[i]) continue;
      // compare canonically by conductor/coefficients
      auto ra = a.values[i].reduced(), rb = b.values[i].reduced();
      if (ra.conductor() != rb.conductor()) return ra.conductor() < rb.conductor();
      return ra.coeffs() < rb.coeffs();
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Character& a, const Character& b) { return a.values == b.values; }),
            out.end());
  return out;
}

std::vector<std::pair<int, int>> table_order_profile(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  // identity = unique e with t[e][i] = i for all i
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool id = true;
    for (int j = 0; j < n; ++j)
      if (t[i][j] != j) {
        id = false;
        break;
      }
    if (id) {
      e = i;
      break;
    }
  }
  if (e < 0) fail(Errc::PreconditionViolated, "table has no identity");
  std::map<int, int> prof;
  for (int i = 0; i < n; ++i) {
    int x = i, o = 1;
    while (x != e) {
      x = t[x][i];
      ++o;
    }
    prof[o]++;
  }
  return {prof.begin(), prof.end()};
}

namespace {

bool extend_iso(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                const std::vector<int>& gens, size_t gi, std::vector<int>& img,
                std::vector<int>& ordb) {
  int n = static_cast<int>(a.size());
  if (gi == gens.size()) {
    // generate the map: BFS words in generators
    std::vector<int> map(n, -1);
    int ea = -1, eb = -1;
    for (int i = 0; i < n; ++i) {
      bool id = true;
      for (int j = 0; j < n; ++j)
        if (a[i][j] != j) id = false;
      if (id) ea = i;
    }
    for (int i = 0; i < n; ++i) {
      bool id = true;
      for (int j = 0; j < n; ++j)
        if (b[i][j] != j) id = false;
      if (id) eb = i;
    }
    map[ea] = eb;
    std::vector<int> frontier = {ea};
    int mapped = 1;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (size_t t = 0; t < gens.size(); ++t) {
          int xa = a[x][gens[t]];
          int xb = b[map[x]][img[t]];
          if (map[xa] == -1) {
            map[xa] = xb;
            ++mapped;
            next.push_back(xa);
          } else if (map[xa] != xb) {
            return false;
          }
        }
      }
      frontier = std::move(next);
    }
    if (mapped != n) return false;  // gens do not generate (should not happen)
    std::vector<bool> hit(n, false);
    for (int v : map) {
      if (v < 0 || hit[v]) return false;
      hit[v] = true;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (map[a[i][j]] != b[map[i]][map[j]]) return false;
    return true;
  }
  // order of gens[gi] in a
  auto order_in = [](const std::vector<std::vector<int>>& t, int x) {
    int n2 = static_cast<int>(t.size());
    int e = -1;
    for (int i = 0; i < n2; ++i) {
      bool id = true;
      for (int j = 0; j < n2; ++j)
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
  int need = order_in(a, gens[gi]);
  for (int cand = 0; cand < static_cast<int>(b.size()); ++cand) {
    if (ordb[cand] != need) continue;
    img[gi] = cand;
    if (extend_iso(a, b, gens, gi + 1, img, ordb)) return true;
  }
  return false;
}

}  // namespace

bool tables_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  if (table_order_profile(a) != table_order_profile(b)) return false;
  int n = static_cast<int>(a.size());
  // greedy generating set for a
  std::vector<int> gens;
  {
    std::vector<int> reach;  // generated subset
    std::vector<bool> in(n, false);
    int ea = -1;
    for (int i = 0; i < n; ++i) {
      bool id = true;
      for (int j = 0; j < n; ++j)
        if (a[i][j] != j) id = false;
      if (id) ea = i;
    }
    in[ea] = true;
    reach.push_back(ea);
    auto regen = [&] {
      std::fill(in.begin(), in.end(), false);
      in[ea] = true;
      std::vector<int> cur = {ea};
      size_t cnt = 1;
      while (!cur.empty()) {
        std::vector<int> nx;
        for (int x : cur)
          for (int t : gens) {
            int y = a[x][t];
            if (!in[y]) {
              in[y] = true;
              ++cnt;
              nx.push_back(y);
            }
          }
        cur = std::move(nx);
      }
      return cnt;
    };
    size_t cnt = 1;
    while (cnt < static_cast<size_t>(n)) {
      for (int i = 0; i < n; ++i)
        if (!in[i]) {
          gens.push_back(i);
          break;
        }
      cnt = regen();
    }
  }
  std::vector<int> ordb(n);
  for (int i = 0; i < n; ++i) {
    int e = -1;
    for (int k = 0; k < n; ++k) {
      bool id = true;
      for (int j = 0; j < n; ++j)
        if (b[k][j] != j) id = false;
      if (id) e = k;
    }
    int y = i, o = 1;
    while (y != e) {
      y = b[y][i];
      ++o;
    }
    ordb[i] = o;
  }
  std::vector<int> img(gens.size(), -1);
  return extend_iso(a, b, gens, 0, img, ordb);
}

}  // namespace qpa

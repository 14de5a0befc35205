#include "qpa/linalg.hpp"

#include <algorithm>
#include <map>

namespace qpa {

SparseVec SparseVec::unit(int index, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.terms.emplace_back(index, std::move(c));
  return v;
}

SparseVec SparseVec::from_dense(const std::vector<Scalar>& v) {
  SparseVec r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.terms.emplace_back(static_cast<int>(i), v[i]);
  return r;
}

std::vector<Scalar> SparseVec::to_dense(int n) const {
  std::vector<Scalar> v(n, Scalar::zero());
  for (const auto& [i, c] : terms) v[i] = c;
  return v;
}

Scalar SparseVec::coeff(int index) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), index,
                             [](const auto& t, int i) { return t.first < i; });
  if (it != terms.end() && it->first == index) return it->second;
  return Scalar::zero();
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() || j < o.terms.size()) {
    if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
      r.terms.push_back(terms[i++]);
    } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
      r.terms.push_back(o.terms[j++]);
    } else {
      Scalar c = terms[i].second + o.terms[j].second;
      if (!c.is_zero()) r.terms.emplace_back(terms[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const { return *this + o.scaled(Scalar(-1)); }

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec r;
  if (c.is_zero()) return r;
  r.terms.reserve(terms.size());
  for (const auto& [i, a] : terms) {
    Scalar v = a * c;
    if (!v.is_zero()) r.terms.emplace_back(i, std::move(v));
  }
  return r;
}

void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) { v = v + w.scaled(c); }

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // rows are fully back-reduced (zero at every other pivot), so one pass
  // zeroes each pivot coordinate exactly once
  for (const auto& [piv, row] : rows_) {
    if (v.is_zero()) break;
    Scalar c = v.coeff(piv);
    if (!c.is_zero()) axpy(v, -c, row);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  int piv = v.leading_index();
  Scalar inv = v.terms.front().second.inverse();
  v = v.scaled(inv);
  // back-reduce existing rows against the new one
  for (auto& [p, row] : rows_) {
    Scalar c = row.coeff(piv);
    if (!c.is_zero()) axpy(row, -c, v);
  }
  rows_.emplace_back(piv, std::move(v));
  return true;
}

std::vector<SparseVec> EchelonBasis::basis() const {
  std::vector<std::pair<int, SparseVec>> sorted = rows_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseVec> out;
  out.reserve(sorted.size());
  for (auto& [p, row] : sorted) out.push_back(row);
  return out;
}

std::optional<std::vector<Scalar>> EchelonBasis::coordinates(const SparseVec& v) const {
  auto b = basis();
  SparseVec rem = v;
  std::vector<Scalar> coords(b.size(), Scalar::zero());
  for (size_t k = 0; k < b.size(); ++k) {
    Scalar c = rem.coeff(b[k].leading_index());
    if (!c.is_zero()) {
      coords[k] = c;
      axpy(rem, -c, b[k]);
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

std::vector<SparseVec> rref(const std::vector<SparseVec>& vectors) {
  EchelonBasis eb;
  for (const auto& v : vectors) eb.insert(v);
  return eb.basis();
}

int rank_of(const std::vector<SparseVec>& vectors) {
  EchelonBasis eb;
  for (const auto& v : vectors) eb.insert(v);
  return eb.rank();
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& constraint_rows, int n) {
  EchelonBasis eb;
  for (const auto& r : constraint_rows) eb.insert(r);
  auto rows = eb.basis();
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rows) is_pivot[r.leading_index()] = true;
  std::vector<SparseVec> out;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    // free variable j: x_j = 1, pivot variables from the reduced rows
    SparseVec v = SparseVec::unit(j);
    for (const auto& r : rows) {
      Scalar c = r.coeff(j);
      if (!c.is_zero()) v += SparseVec::unit(r.leading_index(), -c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<SparseVec>& rows,
                                                const std::vector<Scalar>& rhs, int n) {
  // augment: column n holds the negated rhs, then read a solution off the RREF
  EchelonBasis eb;
  for (size_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    if (!rhs[i].is_zero()) r += SparseVec::unit(n, -rhs[i]);
    eb.insert(std::move(r));
  }
  auto rr = eb.basis();
  for (const auto& r : rr)
    if (r.leading_index() == n) return std::nullopt;  // 0 = 1 row
  std::vector<Scalar> x(n, Scalar::zero());
  for (const auto& r : rr) {
    // pivot j: x_j + sum_{free} c_k x_k - rhs = 0; set free vars to 0
    Scalar c = r.coeff(n);
    if (!c.is_zero()) x[r.leading_index()] = -c;
  }
  return x;
}

}  // namespace qpa

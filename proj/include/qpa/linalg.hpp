#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qpa/cyclotomic.hpp"

namespace qpa {

using Scalar = Cyclotomic;

/// Sparse coordinate vector: sorted by index, no explicit zeros.
struct SparseVec {
  std::vector<std::pair<int, Scalar>> terms;

  static SparseVec unit(int index, Scalar c = Scalar::one());
  static SparseVec from_dense(const std::vector<Scalar>& v);
  std::vector<Scalar> to_dense(int n) const;

  bool is_zero() const { return terms.empty(); }
  Scalar coeff(int index) const;
  int leading_index() const { return terms.empty() ? -1 : terms.front().first; }

  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec scaled(const Scalar& c) const;
  SparseVec& operator+=(const SparseVec& o) { return *this = *this + o; }
  bool operator==(const SparseVec& o) const { return terms == o.terms; }
};

/// v + c*w in place
void axpy(SparseVec& v, const Scalar& c, const SparseVec& w);

/// Incrementally maintained reduced echelon basis of a subspace of k^n.
/// Rows are normalized (pivot coefficient 1) and fully back-reduced, so the
/// row list sorted by pivot is the canonical RREF basis of the span.
class EchelonBasis {
 public:
  int rank() const { return static_cast<int>(rows_.size()); }
  /// reduce v against the basis; returns the residual
  SparseVec reduce(SparseVec v) const;
  /// insert span member; returns true if the rank grew
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  /// canonical basis, sorted by pivot index
  std::vector<SparseVec> basis() const;
  /// express v in terms of basis(); nullopt if v is outside the span
  std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const;

 private:
  std::vector<std::pair<int, SparseVec>> rows_;  // (pivot, row), unsorted
};

std::vector<SparseVec> rref(const std::vector<SparseVec>& vectors);
int rank_of(const std::vector<SparseVec>& vectors);

/// Nullspace of the linear map k^n -> k^m given by constraint rows
/// (each row r means sum_j r[j] x_j = 0). Deterministic canonical basis.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& constraint_rows, int n);

/// One solution of A x = b with A given by m rows of length n; nullopt if
/// inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<SparseVec>& rows,
                                                const std::vector<Scalar>& rhs, int n);

}  // namespace qpa

#pragma once

#include "qpa/builders.hpp"

namespace qpa {

enum class CoidealSide { Left, Right };

struct CoidealSub {
  HopfPtr parent;
  CoidealSide side = CoidealSide::Left;
  std::vector<SparseVec> basis;  // canonical reduced echelon basis
  bool is_subalgebra = false;
  bool is_coideal = false;
  bool commutative = false;
  bool separable = false;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// All flags computed; separability of a commutative candidate decided by
/// nondegeneracy of the trace form. Throws NotClosed / NotCoideal with an
/// explicit witness in the message.
CoidealSub check_coideal_subalgebra(HopfPtr h, const std::vector<SparseVec>& basis,
                                    CoidealSide side);

/// Complete orthogonal set of dim(L) primitive idempotents of a commutative
/// separable L, by iterated eigenspace splitting of multiplication operators.
/// Eigenvalues are searched among 0, roots of unity (conductor enlarged on
/// demand using exponent_bound), rational roots, and exact solutions of
/// binomial factors t^l - c with c a root of unity. Throws
/// EigenvalueOutsideCyclotomic when a factor cannot be split this way.
std::vector<SparseVec> primitive_idempotents(const CoidealSub& l, long exponent_bound);

struct CoefficientMatrix {
  std::vector<SparseVec> idempotents;            // basis used on the right legs
  std::vector<std::vector<SparseVec>> entries;   // entries[i][j] = c_{ij} in H
  int size = 0;
};

/// Solves Delta(f_j) = sum_i c_{ij} (x) f_i over the primitive-idempotent
/// basis of a commutative separable coideal subalgebra. A right coideal is
/// first carried to a left one by the antipode. The row relations, column
/// relations and sums of the output are verified here; throws
/// MagicRelationFailure otherwise.
CoefficientMatrix coefficient_matrix(const CoidealSub& l, long exponent_bound);

CoidealSub construct_named_lx(const Bicrossed& b, int x_index);
CoidealSub construct_named_onekt(const Bicrossed& b, const PermGroup& t);
CoidealSub construct_named_xt(const Bicrossed& b, const PermGroup& t);
CoidealSub construct_named_kgh(const Bicrossed& b);

struct GradedSupport {
  std::vector<std::vector<SparseVec>> components;  // indexed by F-element
  std::vector<int> support;
  PermGroup T;  // pi(R) = kT
  bool pi_image_is_group = false;
  bool dims_add_up = false;
  bool support_gamma_stable = false;
  bool translation_covariant = false;
  bool support_inverse_closed = false;
  bool contains_kgamma = false;
  bool intersect_trivial = false;  // R cap k^Gamma = k1
  bool t_acts_trivially = false;   // checked when contains_kgamma
  bool t_stable = false;           // checked when intersect_trivial
};

/// Support/grading analysis of a right coideal subalgebra of a split
/// extension. Throws NotRightCoideal.
GradedSupport graded_analysis(const Bicrossed& b, const CoidealSub& r);

/// deterministic ordering for vectors (used to canonicalize idempotent lists)
bool canonical_less(const SparseVec& a, const SparseVec& b);

}  // namespace qpa

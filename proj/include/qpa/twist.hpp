#pragma once

#include <optional>

#include "qpa/magic.hpp"

namespace qpa {

/// Convolution-invertible normalized 2-cocycle on a Hopf algebra, held as a
/// value table on the basis together with its convolution inverse (computed,
/// not input).
struct CocycleForm {
  HopfPtr parent;
  std::vector<std::vector<Scalar>> table;
  std::vector<std::vector<Scalar>> inverse_table;

  Scalar eval(const SparseVec& a, const SparseVec& b) const;
  Scalar eval_inverse(const SparseVec& a, const SparseVec& b) const;
};

/// verifies normalization + the 2-cocycle identity, computes the convolution
/// inverse; throws InvalidCocycle
CocycleForm make_cocycle_form(HopfPtr h, std::vector<std::vector<Scalar>> table);

CocycleForm trivial_cocycle(HopfPtr h);

/// Same coalgebra, multiplication deformed by sigma; antipode re-solved and
/// all axioms verified.
HopfPtr doi_twist(const HopfData& h, const CocycleForm& sigma);

struct SuffTwistResult {
  bool holds = false;
  std::string witness;  // first violating triple when !holds
  std::optional<MagicCert> twisted;
  HopfPtr twisted_algebra;
};

/// Tests sigma(x_ij, x_il) = d_ij d_il (and the same for the inverse) on a
/// full certificate; on success returns the same coordinate matrix read
/// inside the twisted algebra, verified magic and generating. Throws nothing:
/// a failing condition is reported with its first violating triple.
SuffTwistResult check_suff_twist(const MagicCert& cert, const CocycleForm& sigma);

/// sigma'(a,b) = s(p(a), p(b)) for a verified Hopf surjection p onto the
/// group algebra of the abelian group carrying the bicharacter s. Throws
/// NotHopfSurjection / NotBicharacter.
CocycleForm lift_cocycle(HopfPtr h, const HopfMap& p, const GroupAlgebra& target,
                         const Bicharacter& s);

/// Canonical Hopf surjection k^G -> k(Gamma) through restriction to an
/// abelian subgroup A and the Fourier isomorphism k^A = k(A^), with A^
/// identified with the given permutation model Gamma by the first group
/// isomorphism in a deterministic search order. Throws when A^ and Gamma are
/// not isomorphic.
HopfMap character_projection(const FunctionAlgebra& fun, const PermGroup& a,
                             const GroupAlgebra& target);

}  // namespace qpa

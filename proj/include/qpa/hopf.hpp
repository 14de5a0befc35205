#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qpa/linalg.hpp"

namespace qpa {

/// One term of a coproduct: c * b_left (x) b_right
struct Triplet {
  int left, right;
  Scalar c;
};

using Tensor2 = std::map<std::pair<int, int>, Scalar>;  // sparse element of H (x) H'

/// Finite-dimensional Hopf algebra over cyclotomic scalars, given by labeled
/// basis and structure-constant tensors. Instances are immutable once built;
/// all operations on them are pure.
class HopfData {
 public:
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = b_i * b_j
  SparseVec unit;
  std::vector<std::vector<Triplet>> comult;  // comult[i] = Delta(b_i)
  std::vector<Scalar> counit;
  std::vector<SparseVec> antipode;  // antipode[i] = S(b_i)

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  SparseVec apply_antipode(const SparseVec& v) const;
  Tensor2 comult_of(const SparseVec& v) const;
  Scalar counit_of(const SparseVec& v) const;
  std::string describe(const SparseVec& v) const;  // human-readable combination
};

using HopfPtr = std::shared_ptr<const HopfData>;

struct Element {
  HopfPtr parent;
  SparseVec coords;
};

struct HopfReport {
  bool associative = false, unital = false;
  bool coassociative = false, counital = false;
  bool bialgebra = false;
  bool antipode_left = false, antipode_right = false;
  bool s_squared_identity = false;
  bool commutative = false, cocommutative = false;
  std::string first_failure;

  bool all_axioms() const {
    return associative && unital && coassociative && counital && bialgebra && antipode_left &&
           antipode_right;
  }
};

HopfReport verify_hopf(const HopfData& h);

/// Antipode as the convolution inverse of the identity map, found through the
/// minimal polynomial of id in the convolution algebra. A closed-form guess,
/// when supplied, is used after passing both antipode axioms. Throws
/// NoAntipode when id is not convolution invertible.
std::vector<SparseVec> solve_antipode(const HopfData& h,
                                      const std::vector<SparseVec>* guess = nullptr);

struct HopfMap {
  HopfPtr source, target;
  std::vector<SparseVec> matrix;  // matrix[i] = image of source basis vector i
  SparseVec apply(const SparseVec& v) const;
};

bool verify_hopf_map(const HopfMap& f, std::string* why = nullptr);

HopfPtr dual_hopf(const HopfData& h);

/// basis of { h : (id (x) pi) Delta(h) = h (x) 1 }
std::vector<SparseVec> coinvariants(const HopfData& h, const HopfMap& pi);

struct ExactSequenceReport {
  bool iota_hopf_map = false, pi_hopf_map = false;
  bool iota_injective = false, pi_surjective = false;
  bool image_in_coinvariants = false;
  bool coinvariants_dim_matches = false;  // dim coinv == dim A
  bool dim_product = false;               // dim A * dim Hbar == dim H
  bool all() const {
    return iota_hopf_map && pi_hopf_map && iota_injective && pi_surjective &&
           image_in_coinvariants && coinvariants_dim_matches && dim_product;
  }
};

ExactSequenceReport verify_exact_sequence(const HopfData& a, const HopfData& h,
                                          const HopfMap& iota, const HopfMap& pi);

/// Smallest unital subalgebra containing the seed: iterate V <- V + V*V with
/// exact rank tracking. Returns the canonical reduced echelon basis.
std::vector<SparseVec> subalgebra_span_growth(const HopfData& h,
                                              const std::vector<SparseVec>& seed);

bool is_grouplike(const HopfData& h, const SparseVec& v);

bool structure_equal(const HopfData& a, const HopfData& b);
/// equality after relabeling basis i of a as map[i] of b
bool structure_equal_under(const HopfData& a, const HopfData& b, const std::vector<int>& map);

/// true if Delta(v) lies in V (x) V for V = span(space)
bool tensor_in_span_both(const HopfData& h, const Tensor2& t, const EchelonBasis& space);

/// Structure constants induced on a subspace that is closed under
/// multiplication, comultiplication (both legs), and the antipode, and
/// contains the unit. Throws PreconditionViolated when closure fails.
HopfPtr extract_sub_hopf(const HopfData& h, const std::vector<SparseVec>& basis);

}  // namespace qpa

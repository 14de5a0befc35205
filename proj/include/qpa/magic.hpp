#pragma once

#include "qpa/builders.hpp"
#include "qpa/coideal.hpp"

namespace qpa {

/// Square matrix of idempotent-like entries in a Hopf algebra satisfying the
/// orthogonality and sum relations, the comultiplication pattern
/// Delta(u_ij) = sum_k u_ik (x) u_kj, the counit pattern eps(u_ij) = d_ij
/// and the antipode pattern S(u_ij) = u_ji. generated_dim is always computed
/// by span growth, never assumed: a certificate is full exactly when the
/// entries generate the whole algebra.
struct MagicCert {
  HopfPtr parent;
  int size = 0;
  std::vector<std::vector<SparseVec>> entries;
  int generated_dim = 0;
  bool is_full_certificate = false;
  std::vector<std::string> provenance;
  std::string degree_bound_line;
};

/// exhaustive relation check; throws RelationFailure with the identity name,
/// indices, and residual
MagicCert verify_magic(HopfPtr h, std::vector<std::vector<SparseVec>> entries,
                       std::vector<std::string> provenance = {});

/// u_{g,h} = e_{g^{-1}h}: full certificate of degree |G| for k^G
MagicCert cayley_magic(const FunctionAlgebra& fun);

/// u_ij = (1/n) sum_k zeta_n^{k(j-i)} g^k: partial certificate generating
/// the cyclic group algebra k<g> inside kG
MagicCert fourier_magic(const GroupAlgebra& grp, const Perm& g);

/// block-diagonal composition over a common parent
MagicCert block_compose(const std::vector<MagicCert>& certs);

/// embeds certificates for kG and k^G through the canonical inclusions into
/// D(G), block-composes and requires full generation
MagicCert double_magic(const DrinfeldDouble& d, const MagicCert& cert_group_algebra,
                       const MagicCert& cert_function_algebra);

/// push a certificate through an injective Hopf map (entries mapped entrywise)
MagicCert map_certificate(const MagicCert& cert, const HopfMap& f);

/// certificate from the coefficient matrix of a commutative separable coideal
MagicCert coideal_certificate(const CoidealSub& l, long exponent_bound,
                              const std::string& provenance);

}  // namespace qpa

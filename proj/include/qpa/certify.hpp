#pragma once

#include "qpa/twist.hpp"

namespace qpa {

enum class VerdictStatus { QPA_certified, NOT_QPA_refuted, undecided };

const char* status_name(VerdictStatus s);

struct ProofEntry {
  std::string assertion;
  bool holds = false;
  std::string witness;
};

struct EnvelopeInfo {
  std::vector<SparseVec> basis;
  int dim = 0;
  std::string description;
  bool cocommutative = false;
  int grouplike_count = 0;
  std::vector<std::vector<int>> grouplike_table;
};

/// Decision outcome. `undecided` is a first-class result: no general decision
/// procedure is implemented, only certifiers and refuters with verified
/// scope. A verdict never carries both a full certificate and a refutation.
struct Verdict {
  VerdictStatus status = VerdictStatus::undecided;
  std::string method;
  std::optional<MagicCert> certificate;
  std::optional<long> degree_bound;
  std::string degree_derivation;
  std::vector<ProofEntry> refutation_log;
  std::optional<EnvelopeInfo> envelope;

  bool all_log_entries_hold() const {
    for (const auto& e : refutation_log)
      if (!e.holds) return false;
    return true;
  }
};

/// Central abelian extension presentation: an embedded central copy of
/// k^Gamma, a projection onto kF, and homogeneous lifts of the F basis.
struct CentralPresentation {
  HopfPtr H;
  FunctionAlgebra k_gamma;
  HopfMap iota;  // k^Gamma -> H, image central (verified by certify_central)
  GroupAlgebra k_f;
  HopfMap pi;  // H -> kF
  std::vector<SparseVec> lifts;
  long exponent_bound = 2;
};

/// throws PreconditionViolated when the right action is nontrivial
CentralPresentation central_presentation(const Bicrossed& b);
CentralPresentation central_presentation(const DrinfeldDouble& d);

long group_exponent(const PermGroup& g);

Verdict certify_central(const CentralPresentation& p);
Verdict certify_split_abelian(const Bicrossed& b);
Verdict refute_prime(const Bicrossed& b);
Verdict refute_c4_s3(const Bicrossed& b);
Verdict envelope_split_prime(const Bicrossed& b);

/// Cayley-style certificate from the coefficient matrix of H itself viewed
/// as a left coideal subalgebra (commutative H only).
MagicCert certify_commutative(HopfPtr h, long exponent_bound);

/// Fourier blocks over a greedy generating set when the basis consists of
/// group-like elements; nullopt when it does not.
std::optional<MagicCert> certify_cocommutative_basis(HopfPtr h);

Verdict full_pipeline(const Bicrossed& b);
Verdict full_pipeline_plain(HopfPtr h, long exponent_bound);

/// envelope dispatch: split prime case, or the 24-dimensional C4/S3 shape
Verdict compute_envelope(const Bicrossed& b);

/// re-runs the producing operation and compares the proof log entry by entry
bool replay_refutation(const Bicrossed& b, const Verdict& v);

}  // namespace qpa

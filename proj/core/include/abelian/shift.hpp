#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelian/fourier.hpp"

namespace abelian {

struct ShiftStep {
  GElem psi;
  GElem alpha;
  bool operator==(const ShiftStep&) const = default;
};

/// Machine-checkable witness that {alpha_1, ..., alpha_t} is independent
/// with respect to the zero set: psi_1 + alpha_1 is a nonzero, and for every
/// later step i, psi_i + alpha_i is a nonzero while psi_i + alpha_j lies in
/// the zero set for all j < i. Acceptance lower-bounds the weight of every
/// nonzero function whose zero set is exactly (or contains, with the same
/// nonzeros preserved) the recorded one.
struct ShiftCertificate {
  GroupSpec group;
  CharSet zero_set;
  std::vector<ShiftStep> steps;
};

struct VerifyResult {
  bool accepted = false;
  std::int64_t size = 0;          // accepted size t
  std::int64_t failing_step = 0;  // 1-based; 0 when accepted
  std::string reason;
};

/// O(t^2) membership check of the certificate conditions.
VerifyResult verify_certificate(const ShiftCertificate& cert);

struct IndependentSet {
  std::vector<GElem> elements;  // alpha_1, ..., alpha_t in certificate order
  ShiftCertificate certificate;
};

/// Incremental construction of certified independent sets by the two
/// closure rules: translating the current set, and extending it by a
/// nonzero once the current set lies inside the zero set. The recorded
/// steps verify by construction.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(CharSet zero_set);

  /// Translate the current set by delta.
  void shift(const GElem& delta);
  /// True when every current element lies in the zero set.
  bool inside_zeros() const;
  /// Append eta; requires inside_zeros() and eta outside the zero set.
  void extend(const GElem& eta);

  std::int64_t size() const { return static_cast<std::int64_t>(steps_.size()); }
  std::vector<GElem> elements() const;
  ShiftCertificate certificate() const;
  IndependentSet build() const;

 private:
  GroupSpec group_;
  CharSet zero_set_;
  std::vector<ShiftStep> steps_;
};

/// Greedy independent-set construction: repeatedly translate the current
/// set into the zero set (possible at least while |A| < |dual|/|nonzeros|)
/// and extend by a nonzero. Always returns a certificate of size at least
/// ceil(|dual| / |nonzeros|). Candidates are scanned enumeration-minimal;
/// a nonzero seed deterministically permutes the scan order.
IndependentSet greedy_delta(const CharSet& zeros, std::uint64_t seed = 0);

struct ExactDeltaResult {
  std::int64_t delta = 0;
  IndependentSet witness;
};

/// Exhaustive value of delta(dual, Z): depth-first search over reachable
/// independent sets, memoized on the set up to translation (translates of a
/// set reach exactly the same children, so the value is a class invariant).
ExactDeltaResult exact_delta(const CharSet& zeros, std::int64_t cap = 16);

/// Definition check: x_i + S not contained in (x_1+S) u ... u (x_{i-1}+S)
/// for i = 2..t. A single-element sequence always qualifies.
bool sequence_has_full_s_rank(const GroupSpec& group, const std::vector<GElem>& xs,
                              const std::vector<GElem>& s);

/// The sequence -alpha_1, ..., -alpha_t, which has N-rank t for
/// N = complement of the certificate's zero set.
std::vector<GElem> srank_sequence_from_certificate(const ShiftCertificate& cert);

/// Constructive converse: from a sequence of full S-rank, build a
/// certificate over Z = complement of S with alpha_i = -x_i. Empty when the
/// sequence does not have full S-rank.
std::optional<ShiftCertificate> certificate_from_srank_sequence(const GroupSpec& group,
                                                                const std::vector<GElem>& xs,
                                                                const std::vector<GElem>& s);

/// Image of a certificate under the index map e -> k*e. Verifies against
/// the same zero set whenever the zero set is closed under that map.
ShiftCertificate map_certificate(const ShiftCertificate& cert, std::int64_t multiplier);

/// Rank of the |A| x |S| matrix of character values chi_a(-s) over E;
/// true when the rows are independent, i.e. rank equals |A|.
bool matrix_rank_check(const GroupSpec& group, const std::vector<GElem>& a,
                       const std::vector<GElem>& s, const FieldCtx& field);

struct ShiftBoundBudget {
  std::int64_t exact_cap = 16;             // exact delta only up to this dual order
  std::int64_t orbit_enumeration_cap = 20; // full superset enumeration up to this many orbits
  std::uint64_t seed = 0;                  // candidate permutation for greedy fallbacks
};

struct CodeShiftBound {
  bool degenerate = false;  // the closure is the whole dual: the code is {0}
  std::int64_t bound = 0;
  bool certified = false;  // every evaluated superset used an exact delta
  std::optional<CharSet> minimizing_zero_set;
};

/// Code-level shift bound: minimum of delta(dual, Z') over all F-closed
/// proper supersets Z' of the closure of the defining zeros, enumerated as
/// unions of conjugation orbits (branch and bound above the enumeration
/// cap, pruned with the coset counting bound). The result is a certified
/// minimum-distance lower bound exactly when every evaluated delta was
/// exact; greedy fallbacks mark it heuristic.
CodeShiftBound code_shift_bound(const CharSet& zeros, const FieldCtx& field,
                                const ShiftBoundBudget& budget = {});

struct BchChain {
  GElem chi;
  std::int64_t start = 0;              // a
  std::int64_t designed_distance = 0;  // d; the chain is chi^a..chi^(a+d-2)
};

/// BCH-style bound: with a chain of d-1 consecutive chi-powers among the
/// zeros, d(C) >= min(d, bound of the code augmented by all chi-powers). A
/// degenerate augmented code contributes no constraint, leaving d.
CodeShiftBound bch_bound(const CharSet& zeros, const BchChain& chain, const FieldCtx& field,
                         const ShiftBoundBudget& budget = {});

}  // namespace abelian

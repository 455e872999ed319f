#pragma once

#include <cstdint>
#include <vector>

#include "abelian/fourier.hpp"

namespace abelian {

/// Abelian code cut out by defining zeros: all base-field-valued functions
/// whose transform vanishes on the F-closure of the defining set. Carries a
/// kernel basis over the base field in reduced echelon form.
class AbelianCode {
 public:
  AbelianCode(GroupSpec group, FieldCtx field, CharSet defining_zeros, CharSet complete_zeros,
              std::vector<GAlgElem> basis);

  const GroupSpec& group() const { return group_; }
  const FieldCtx& field() const { return field_; }
  const CharSet& defining_zeros() const { return defining_zeros_; }
  const CharSet& complete_zeros() const { return complete_zeros_; }
  std::int64_t length() const { return group_.order(); }
  std::int64_t dimension() const { return static_cast<std::int64_t>(basis_.size()); }
  const std::vector<GAlgElem>& basis() const { return basis_; }

 private:
  GroupSpec group_;
  FieldCtx field_;
  CharSet defining_zeros_;
  CharSet complete_zeros_;
  std::vector<GAlgElem> basis_;
};

/// Build the code over the base field of `field` from its defining zeros:
/// each extension-field constraint expands into extension-degree many
/// base-field linear constraints, and the kernel is extracted over the base
/// field. The dimension always equals |dual| - |complete zeros|.
AbelianCode code_from_zeros(const GroupSpec& group, const FieldCtx& field, const CharSet& zeros);

/// Minimum weight by enumerating all nonzero codewords (base-q reflected
/// Gray order with incremental weight updates). Requires a finite base
/// field and q^dimension <= cap.
std::int64_t min_weight_brute(const AbelianCode& code, std::int64_t cap = std::int64_t{1} << 20);

/// True when the transform of f vanishes on the complete zero set. f must
/// be base-field-valued.
bool codeword_membership(const GAlgElem& f, const AbelianCode& code);

}  // namespace abelian

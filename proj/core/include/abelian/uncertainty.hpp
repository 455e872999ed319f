#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "abelian/fourier.hpp"

namespace abelian {

enum class EqualityClass {
  none,
  classical,         // support product equals |G|
  nonclassical_11,   // equality only in the transform-side sharpened bound
  nonclassical_12,   // equality only in the function-side sharpened bound
  nonclassical_both,
};

std::string to_string(EqualityClass c);

struct UncertaintyReport {
  std::int64_t supp_f_size = 0;
  std::int64_t supp_fhat_size = 0;
  std::int64_t group_order = 0;
  std::int64_t ds_lhs = 0;            // |supp f| * |supp fhat|
  std::int64_t ds_rhs_classical = 0;  // |G|
  std::int64_t stabilizer_f_size = 0;
  std::int64_t stabilizer_fhat_size = 0;
  std::int64_t sharpened_rhs_11 = 0;  // |G| + |supp fhat| - |H(supp fhat)|
  std::int64_t sharpened_rhs_12 = 0;  // |G| + |supp f| - |H(supp f)|
  EqualityClass equality_class = EqualityClass::none;
};

/// Support sizes, stabilizers, both sharpened right-hand sides, and the
/// equality classification for a nonzero function. The sharpened
/// inequalities are theorems; a violation raises internal_error.
UncertaintyReport ds_report(const GAlgElem& f);

struct GeneralizedDsResult {
  std::int64_t supp_f_size = 0;
  std::int64_t restricted_supp_size = 0;  // |supp(fhat) ∩ K|
  std::int64_t subgroup_size = 0;
  bool holds = false;
  bool equality = false;
  bool coset_flag = false;  // restricted support is a coset
};

/// Subgroup-restricted uncertainty check |supp f| * |supp fhat ∩ K| >= |K|.
/// The transform must not vanish identically on K.
GeneralizedDsResult generalized_ds(const GAlgElem& f, const Subgroup& k);

struct CosetCharacterForm {
  FieldScalar scale;
  GElem character;
  GElem representative;
  Subgroup subgroup;
};

/// When the support product equals |G|, decompose f as
/// scale * chi_character * indicator(representative + subgroup), verified by
/// reconstruction; empty when the product exceeds |G|. Canonical choices:
/// enumeration-minimal character among the valid ones and enumeration-
/// minimal support element as the representative.
std::optional<CosetCharacterForm> equality_classify(const GAlgElem& f);

/// f(x) = scale * chi_character(x) on representative + subgroup, else 0.
GAlgElem build_coset_character(const FieldScalar& scale, const GElem& character,
                               const GElem& representative, const Subgroup& subgroup);

/// Weight bounds for a binary Hamming-code-style zero set on Z_{2^d-1}:
/// the plain support-product bound versus the stabilizer-sharpened one
/// (2 versus 3 for every d >= 3).
std::pair<std::int64_t, std::int64_t> hamming_bound_comparison(std::int64_t d);

struct ScanSummary {
  std::int64_t total = 0;
  std::int64_t count_none = 0;
  std::int64_t count_classical = 0;
  std::int64_t count_nonclassical_11 = 0;
  std::int64_t count_nonclassical_12 = 0;
  std::int64_t count_nonclassical_both = 0;
};

/// Equality-class census over every nonzero f with values in {-1, 0, 1},
/// computed over the characteristic-zero backend.
ScanSummary scan_sign_patterns(const GroupSpec& group);

}  // namespace abelian

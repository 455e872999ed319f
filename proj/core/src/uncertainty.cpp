#include "abelian/uncertainty.hpp"

#include <algorithm>

namespace abelian {

std::string to_string(EqualityClass c) {
  switch (c) {
    case EqualityClass::none: return "none";
    case EqualityClass::classical: return "classical";
    case EqualityClass::nonclassical_11: return "nonclassical-11";
    case EqualityClass::nonclassical_12: return "nonclassical-12";
    case EqualityClass::nonclassical_both: return "nonclassical-both";
  }
  return "none";
}

UncertaintyReport ds_report(const GAlgElem& f) {
  if (f.is_zero()) throw domain_error("ds_report: function is zero");
  const GroupSpec& g = f.group();
  GAlgElem fhat = fourier_transform(f);

  UncertaintyReport report;
  report.group_order = g.order();
  std::vector<GElem> supp_f = support(f);
  std::vector<GElem> supp_fhat = support(fhat);
  report.supp_f_size = static_cast<std::int64_t>(supp_f.size());
  report.supp_fhat_size = static_cast<std::int64_t>(supp_fhat.size());
  report.ds_lhs = report.supp_f_size * report.supp_fhat_size;
  report.ds_rhs_classical = g.order();
  report.stabilizer_f_size = stabilizer(g, supp_f).size();
  report.stabilizer_fhat_size = stabilizer(g, supp_fhat).size();
  report.sharpened_rhs_11 = g.order() + report.supp_fhat_size - report.stabilizer_fhat_size;
  report.sharpened_rhs_12 = g.order() + report.supp_f_size - report.stabilizer_f_size;

  if (report.ds_lhs < report.sharpened_rhs_11 || report.ds_lhs < report.sharpened_rhs_12) {
    throw internal_error("ds_report: a sharpened uncertainty inequality failed");
  }

  bool eq11 = report.ds_lhs == report.sharpened_rhs_11;
  bool eq12 = report.ds_lhs == report.sharpened_rhs_12;
  if (report.ds_lhs == report.ds_rhs_classical) {
    report.equality_class = EqualityClass::classical;
  } else if (eq11 && eq12) {
    report.equality_class = EqualityClass::nonclassical_both;
  } else if (eq11) {
    report.equality_class = EqualityClass::nonclassical_11;
  } else if (eq12) {
    report.equality_class = EqualityClass::nonclassical_12;
  }
  return report;
}

GeneralizedDsResult generalized_ds(const GAlgElem& f, const Subgroup& k) {
  if (!(k.parent() == f.group())) throw domain_error("generalized_ds: subgroup of a different group");
  if (f.is_zero()) throw domain_error("generalized_ds: function is zero");
  GAlgElem fhat = fourier_transform(f);
  std::vector<GElem> restricted;
  for (const GElem& e : k.elements()) {
    if (!fhat.value(e).is_zero()) restricted.push_back(e);
  }
  if (restricted.empty()) {
    throw precondition_error("generalized_ds: the transform vanishes on the whole subgroup");
  }
  GeneralizedDsResult result;
  result.supp_f_size = f.weight();
  result.restricted_supp_size = static_cast<std::int64_t>(restricted.size());
  result.subgroup_size = k.size();
  result.holds = result.supp_f_size * result.restricted_supp_size >= result.subgroup_size;
  result.equality = result.supp_f_size * result.restricted_supp_size == result.subgroup_size;
  result.coset_flag = is_coset(f.group(), restricted).has_value();
  if (!result.holds) throw internal_error("generalized_ds: the restricted inequality failed");
  return result;
}

std::optional<CosetCharacterForm> equality_classify(const GAlgElem& f) {
  if (f.is_zero()) throw domain_error("equality_classify: function is zero");
  const GroupSpec& g = f.group();
  const FieldCtx& field = f.field();
  GAlgElem fhat = fourier_transform(f);
  std::vector<GElem> supp_f = support(f);
  std::vector<GElem> supp_fhat = support(fhat);
  std::int64_t product =
      static_cast<std::int64_t>(supp_f.size()) * static_cast<std::int64_t>(supp_fhat.size());
  if (product < g.order()) throw internal_error("equality_classify: uncertainty bound failed");
  if (product > g.order()) return std::nullopt;

  auto coset = is_coset(g, supp_fhat);
  if (!coset.has_value()) {
    throw internal_error("equality_classify: transform support of an extremal function is not a coset");
  }
  GElem character = coset->representative;  // minimal valid choice
  Subgroup h = perp(g, coset->subgroup.elements());
  GElem rep = *std::min_element(supp_f.begin(), supp_f.end());
  // scale = chi(-rep) f(rep)
  FieldScalar scale = character_eval(g, character, g.neg(rep), field) * f.value(rep);
  CosetCharacterForm form{scale, character, rep, h};
  GAlgElem rebuilt = build_coset_character(form.scale, form.character, form.representative,
                                           form.subgroup);
  if (!(rebuilt == f)) {
    throw internal_error("equality_classify: reconstruction does not reproduce the function");
  }
  return form;
}

GAlgElem build_coset_character(const FieldScalar& scale, const GElem& character,
                               const GElem& representative, const Subgroup& subgroup) {
  if (scale.is_zero()) throw domain_error("build_coset_character: scale is zero");
  const GroupSpec& g = subgroup.parent();
  g.require_member(character, "build_coset_character");
  g.require_member(representative, "build_coset_character");
  const FieldCtx field = scale.ctx();
  std::vector<FieldScalar> vals(static_cast<std::size_t>(g.order()), field.zero());
  for (const GElem& h : subgroup.elements()) {
    GElem x = g.add(representative, h);
    vals[static_cast<std::size_t>(g.index(x))] = scale * character_eval(g, character, x, field);
  }
  return GAlgElem(g, field, std::move(vals));
}

std::pair<std::int64_t, std::int64_t> hamming_bound_comparison(std::int64_t d) {
  if (d < 3) throw domain_error("hamming_bound_comparison: d must be at least 3");
  if (d > 12) throw resource_error("hamming_bound_comparison: d too large for a dense scan");
  const std::int64_t n = (std::int64_t{1} << d) - 1;
  GroupSpec g = make_group({n});
  FieldCtx field = build_field(2, n);
  CharSet z = f_closure(CharSet(g, {GElem{1}}), field);
  CharSet nonzeros = z.complement();
  Subgroup h = stabilizer(g, nonzeros.elements());
  std::int64_t supp_fhat = nonzeros.size();
  std::int64_t ds_bound = (n + supp_fhat - 1) / supp_fhat;
  std::int64_t sharpened = (n + supp_fhat - h.size() + supp_fhat - 1) / supp_fhat;
  return {ds_bound, sharpened};
}

ScanSummary scan_sign_patterns(const GroupSpec& group) {
  const std::int64_t n = group.order();
  if (n > 12) throw resource_error("scan_sign_patterns: group order too large for a 3^n scan");
  FieldCtx field = build_field(0, group.exponent());
  FieldScalar values[3] = {field.from_integer(-1), field.from_integer(0), field.from_integer(1)};

  ScanSummary summary;
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t rest = c;
    bool nonzero = false;
    std::vector<FieldScalar> vals;
    vals.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      int digit = static_cast<int>(rest % 3);  // 0 -> -1, 1 -> 0, 2 -> +1
      rest /= 3;
      vals.push_back(values[digit]);
      if (digit != 1) nonzero = true;
    }
    if (!nonzero) continue;
    GAlgElem f(group, field, std::move(vals));
    UncertaintyReport report = ds_report(f);
    ++summary.total;
    switch (report.equality_class) {
      case EqualityClass::none: ++summary.count_none; break;
      case EqualityClass::classical: ++summary.count_classical; break;
      case EqualityClass::nonclassical_11: ++summary.count_nonclassical_11; break;
      case EqualityClass::nonclassical_12: ++summary.count_nonclassical_12; break;
      case EqualityClass::nonclassical_both: ++summary.count_nonclassical_both; break;
    }
  }
  return summary;
}

}  // namespace abelian

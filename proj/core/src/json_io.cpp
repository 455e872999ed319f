#include "abelian/json_io.hpp"

namespace abelian::io {

namespace {

std::int64_t get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

const json& get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw parse_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json group_to_json(const GroupSpec& g) { return json(g.factors()); }

GroupSpec group_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("group: expected a nonempty array of factors");
  std::vector<std::int64_t> factors;
  for (const auto& x : j) factors.push_back(get_int(x, "group factor"));
  try {
    return make_group(factors);
  } catch (const invalid_spec_error& e) {
    throw parse_error(e.what());
  }
}

json elem_to_json(const GElem& e) { return json(e.coords); }

GElem elem_from_json(const json& j, const GroupSpec& g) {
  if (!j.is_array()) throw parse_error("element: expected a coordinate array");
  GElem e;
  for (const auto& x : j) e.coords.push_back(get_int(x, "coordinate"));
  if (!g.contains(e)) {
    throw parse_error("element " + e.to_string() + " is out of range for the group");
  }
  return e;
}

json elems_to_json(const std::vector<GElem>& elems) {
  json out = json::array();
  for (const GElem& e : elems) out.push_back(elem_to_json(e));
  return out;
}

std::vector<GElem> elems_from_json(const json& j, const GroupSpec& g) {
  if (!j.is_array()) throw parse_error("element list: expected an array");
  std::vector<GElem> out;
  for (const auto& x : j) out.push_back(elem_from_json(x, g));
  return out;
}

json charset_to_json(const CharSet& s) { return elems_to_json(s.elements()); }

CharSet charset_from_json(const json& j, const GroupSpec& g) {
  return CharSet(g, elems_from_json(j, g));
}

json field_to_json(const FieldCtx& ctx) {
  json out;
  out["kind"] = ctx.kind() == FieldCtx::Kind::finite ? "finite" : "cyclotomic";
  out["p"] = ctx.characteristic();
  if (ctx.kind() == FieldCtx::Kind::finite) out["q"] = ctx.base_order();
  out["N"] = ctx.root_order();
  out["modulus"] = ctx.modulus();
  return out;
}

FieldCtx field_from_json(const json& j, std::optional<std::int64_t> default_root_order) {
  if (!j.is_object()) throw parse_error("field: expected an object");
  std::int64_t p = get_int(get_field(j, "p"), "field p");
  std::int64_t n;
  if (j.contains("N")) {
    n = get_int(j.at("N"), "field N");
  } else if (default_root_order) {
    n = *default_root_order;
  } else {
    throw parse_error("field: missing root order N");
  }
  std::int64_t base_degree = 1;
  if (j.contains("q") && p != 0) {
    std::int64_t q = get_int(j.at("q"), "field q");
    std::int64_t power = p;
    base_degree = 1;
    while (power < q) {
      power *= p;
      ++base_degree;
    }
    if (power != q) throw parse_error("field: q is not a power of p");
  }
  FieldCtx ctx;
  try {
    ctx = build_field(p, n, base_degree);
  } catch (const error& e) {
    throw parse_error(std::string("field: ") + e.what());
  }
  if (j.contains("kind")) {
    std::string kind = j.at("kind").get<std::string>();
    bool finite = ctx.kind() == FieldCtx::Kind::finite;
    if ((kind == "finite") != finite) throw parse_error("field: kind disagrees with p");
  }
  if (j.contains("modulus")) {
    std::vector<std::int64_t> mod;
    for (const auto& x : j.at("modulus")) mod.push_back(get_int(x, "modulus coefficient"));
    if (mod != ctx.modulus()) throw parse_error("field: modulus disagrees with the canonical one");
  }
  return ctx;
}

json scalar_to_json(const FieldScalar& v) {
  if (v.ctx().kind() == FieldCtx::Kind::finite) return json(v.finite_coeffs());
  json out = json::array();
  for (const mpq_class& c : v.rational_coeffs()) {
    if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p()) {
      throw domain_error("scalar coefficient too large to serialize");
    }
    out.push_back(json::array({c.get_num().get_si(), c.get_den().get_si()}));
  }
  return out;
}

FieldScalar scalar_from_json(const json& j, const FieldCtx& ctx) {
  if (j.is_number_integer()) return ctx.from_integer(j.get<std::int64_t>());
  if (!j.is_array()) throw parse_error("scalar: expected an integer or a coefficient array");
  if (ctx.kind() == FieldCtx::Kind::finite) {
    std::vector<std::int64_t> coeffs;
    for (const auto& x : j) coeffs.push_back(get_int(x, "scalar coefficient"));
    return ctx.from_finite_coeffs(coeffs);
  }
  std::vector<mpq_class> coeffs;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(x.get<std::int64_t>()));
    } else if (x.is_array() && x.size() == 2) {
      std::int64_t num = get_int(x.at(0), "numerator");
      std::int64_t den = get_int(x.at(1), "denominator");
      if (den == 0) throw parse_error("scalar: zero denominator");
      mpq_class q(static_cast<long>(num), static_cast<long>(den));
      q.canonicalize();
      coeffs.push_back(std::move(q));
    } else {
      throw parse_error("scalar: rational coefficients are integers or [num, den] pairs");
    }
  }
  return ctx.from_rational_coeffs(coeffs);
}

json function_to_json(const GAlgElem& f) {
  json out;
  out["group"] = group_to_json(f.group());
  out["field"] = field_to_json(f.field());
  json values = json::array();
  for (std::int64_t i = 0; i < f.group().order(); ++i) values.push_back(scalar_to_json(f.value_at(i)));
  out["values"] = values;
  return out;
}

GAlgElem function_from_json(const json& j) {
  GroupSpec g = group_from_json(get_field(j, "group"));
  FieldCtx field = field_from_json(get_field(j, "field"), g.exponent());
  const json& values = get_field(j, "values");
  if (!values.is_array() || static_cast<std::int64_t>(values.size()) != g.order()) {
    throw parse_error("function: expected one value per group element");
  }
  std::vector<FieldScalar> vals;
  vals.reserve(values.size());
  for (const auto& v : values) vals.push_back(scalar_from_json(v, field));
  return GAlgElem(std::move(g), std::move(field), std::move(vals));
}

json certificate_to_json(const ShiftCertificate& cert) {
  json out;
  out["group"] = group_to_json(cert.group);
  out["zeros"] = charset_to_json(cert.zero_set);
  json steps = json::array();
  for (const ShiftStep& s : cert.steps) {
    steps.push_back(json{{"psi", elem_to_json(s.psi)}, {"alpha", elem_to_json(s.alpha)}});
  }
  out["steps"] = steps;
  return out;
}

ShiftCertificate certificate_from_json(const json& j) {
  GroupSpec g = group_from_json(get_field(j, "group"));
  CharSet zeros = charset_from_json(get_field(j, "zeros"), g);
  const json& steps_json = get_field(j, "steps");
  if (!steps_json.is_array()) throw parse_error("certificate: steps must be an array");
  std::vector<ShiftStep> steps;
  for (const auto& s : steps_json) {
    steps.push_back(ShiftStep{elem_from_json(get_field(s, "psi"), g),
                              elem_from_json(get_field(s, "alpha"), g)});
  }
  return ShiftCertificate{std::move(g), std::move(zeros), std::move(steps)};
}

json code_description_to_json(const CodeDescription& d) {
  json out;
  out["group"] = group_to_json(d.group);
  json field;
  field["p"] = d.field.characteristic();
  if (d.field.kind() == FieldCtx::Kind::finite) field["q"] = d.field.base_order();
  out["field"] = field;
  out["zeros"] = charset_to_json(d.zeros);
  return out;
}

CodeDescription code_description_from_json(const json& j) {
  GroupSpec g = group_from_json(get_field(j, "group"));
  FieldCtx field = field_from_json(get_field(j, "field"), g.exponent());
  if (field.root_order() != g.exponent()) {
    throw parse_error("code: field root order must equal the group exponent");
  }
  CharSet zeros = charset_from_json(get_field(j, "zeros"), g);
  return CodeDescription{std::move(g), std::move(field), std::move(zeros)};
}

json element_set_to_json(const ElementSet& s) {
  json out;
  out["group"] = group_to_json(s.group);
  out["elements"] = elems_to_json(s.elements);
  return out;
}

ElementSet element_set_from_json(const json& j) {
  GroupSpec g = group_from_json(get_field(j, "group"));
  std::vector<GElem> elems = elems_from_json(get_field(j, "elements"), g);
  return ElementSet{std::move(g), std::move(elems)};
}

json to_json(const UncertaintyReport& r) {
  return json{{"supp_f_size", r.supp_f_size},
              {"supp_fhat_size", r.supp_fhat_size},
              {"group_order", r.group_order},
              {"ds_lhs", r.ds_lhs},
              {"ds_rhs_classical", r.ds_rhs_classical},
              {"stabilizer_f_size", r.stabilizer_f_size},
              {"stabilizer_fhat_size", r.stabilizer_fhat_size},
              {"sharpened_rhs_11", r.sharpened_rhs_11},
              {"sharpened_rhs_12", r.sharpened_rhs_12},
              {"equality_class", to_string(r.equality_class)}};
}

json to_json(const GeneralizedDsResult& r) {
  return json{{"supp_f_size", r.supp_f_size},
              {"restricted_supp_size", r.restricted_supp_size},
              {"subgroup_size", r.subgroup_size},
              {"holds", r.holds},
              {"equality", r.equality},
              {"coset_flag", r.coset_flag}};
}

json to_json(const NearFactorizationReport& r) {
  json out{{"difference", elems_to_json(r.difference)},
           {"stabilizer_size", r.stabilizer_size},
           {"covers_complement_of_stabilizer", r.covers_complement_of_stabilizer},
           {"direct_sum", r.direct_sum},
           {"near_factorization", r.near_factorization}};
  if (r.quotient) {
    out["quotient"] = json{{"b0", elems_to_json(r.quotient->b0)},
                           {"d", elems_to_json(r.quotient->d)},
                           {"covers_punctured_quotient", r.quotient->covers_punctured_quotient}};
  }
  return out;
}

json to_json(const CodeShiftBound& r) {
  json out{{"degenerate", r.degenerate}, {"certified", r.certified}};
  if (!r.degenerate) {
    out["bound"] = r.bound;
    if (r.minimizing_zero_set) out["minimizing_zeros"] = charset_to_json(*r.minimizing_zero_set);
  }
  return out;
}

json to_json(const ScanSummary& r) {
  return json{{"total", r.total},
              {"none", r.count_none},
              {"classical", r.count_classical},
              {"nonclassical-11", r.count_nonclassical_11},
              {"nonclassical-12", r.count_nonclassical_12},
              {"nonclassical-both", r.count_nonclassical_both}};
}

}  // namespace abelian::io

// Command-line surface for the abelian toolkit: transforms, shift-bound
// searches, certificate emission and verification, brute-force minimum
// weight, uncertainty reports, sign-pattern scans, and near-factorization
// checks. All input and output is JSON; exit codes are 0 for
// success/accepted, 1 for rejected certificates or violated preconditions,
// and 2 for malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "abelian/code.hpp"
#include "abelian/fourier.hpp"
#include "abelian/json_io.hpp"
#include "abelian/shift.hpp"
#include "abelian/uncertainty.hpp"

namespace {

using abelian::io::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw abelian::parse_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw abelian::parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

json parse_inline(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw abelian::parse_error(std::string("invalid ") + what + ": " + e.what());
  }
}

// "p=2,N=7" or "p=2,q=4,N=7"
json field_from_option(const std::string& text) {
  json out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw abelian::parse_error("field option: expected k=v pairs");
    std::string key = part.substr(0, eq);
    std::string value = part.substr(eq + 1);
    try {
      out[key] = std::stoll(value);
    } catch (const std::exception&) {
      throw abelian::parse_error("field option: value of " + key + " is not an integer");
    }
  }
  return out;
}

// accepts plain integers and "2^20"
std::int64_t parse_cap(const std::string& text) {
  auto caret = text.find('^');
  try {
    if (caret == std::string::npos) return std::stoll(text);
    std::int64_t base = std::stoll(text.substr(0, caret));
    std::int64_t exp = std::stoll(text.substr(caret + 1));
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) out *= base;
    return out;
  } catch (const std::exception&) {
    throw abelian::parse_error("cap: expected an integer or base^exponent");
  }
}

void emit(const json& out, const std::optional<std::string>& output_path) {
  std::string text = out.dump(2) + "\n";
  if (output_path) {
    std::ofstream f(*output_path);
    if (!f.good()) throw abelian::parse_error("cannot write file: " + *output_path);
    f << text;
  }
  std::cout << text;
}

int run(int argc, char** argv) {
  CLI::App app{"exact Fourier analysis, shift-bound certificates, and uncertainty reports "
               "on finite abelian groups"};
  app.require_subcommand(1);
  std::optional<std::string> output_path;

  // transform
  std::string transform_group, transform_field, transform_values;
  bool transform_inverse = false;
  auto* transform = app.add_subcommand("transform", "Fourier transform of a dense function");
  transform->add_option("--group", transform_group, "group factors, e.g. [7,7]")->required();
  transform->add_option("--field", transform_field, "field, e.g. p=2,N=7")->required();
  transform->add_option("--values", transform_values, "JSON array of values")->required();
  transform->add_flag("--inverse", transform_inverse, "apply the inverse transform");

  // shiftbound
  std::string shiftbound_zeros;
  bool sb_exact = false, sb_greedy = false;
  std::uint64_t sb_seed = 0;
  std::string sb_cap = "16";
  std::optional<std::string> sb_field;
  auto* shiftbound = app.add_subcommand(
      "shiftbound", "shift bound for a zero set (with --field: the code-level bound over all "
                    "conjugation-closed supersets)");
  shiftbound->add_option("--zeros", shiftbound_zeros, "JSON file with {group, zeros}")->required();
  shiftbound->add_flag("--exact", sb_exact, "exhaustive search");
  shiftbound->add_flag("--greedy", sb_greedy, "greedy construction");
  shiftbound->add_option("--seed", sb_seed, "candidate-order seed (default 0)");
  shiftbound->add_option("--cap", sb_cap, "exact-search cap on the dual order");
  shiftbound->add_option("--field", sb_field, "field for the code-level bound, e.g. p=2");

  // certify
  std::string certify_zeros;
  bool cert_exact = false, cert_greedy = false;
  std::uint64_t cert_seed = 0;
  std::string cert_cap = "16";
  auto* certify = app.add_subcommand("certify", "emit an independent-set certificate");
  certify->add_option("--zeros", certify_zeros, "JSON file with {group, zeros}")->required();
  certify->add_flag("--exact", cert_exact, "exhaustive search");
  certify->add_flag("--greedy", cert_greedy, "greedy construction");
  certify->add_option("--seed", cert_seed, "candidate-order seed");
  certify->add_option("--cap", cert_cap, "exact-search cap on the dual order");

  // verify
  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "check a certificate file");
  verify->add_option("certificate", verify_file, "certificate JSON file")->required();

  // mindist
  std::string mindist_code, mindist_cap = "2^20";
  auto* mindist = app.add_subcommand("mindist", "brute-force minimum weight of a code");
  mindist->add_option("--code", mindist_code, "JSON file with {group, field, zeros}")->required();
  mindist->add_option("--cap", mindist_cap, "enumeration cap, e.g. 2^20");

  // code-info
  std::string codeinfo_code, codeinfo_cap = "2^20", codeinfo_sbcap = "16";
  bool codeinfo_brute = false, codeinfo_bound = false;
  std::uint64_t codeinfo_seed = 0;
  auto* codeinfo = app.add_subcommand("code-info", "dimension and complete zeros of a code");
  codeinfo->add_option("--code", codeinfo_code, "JSON file with {group, field, zeros}")->required();
  codeinfo->add_flag("--brute", codeinfo_brute, "add the brute-force minimum weight");
  codeinfo->add_flag("--bound", codeinfo_bound, "add the code-level shift bound");
  codeinfo->add_option("--cap", codeinfo_cap, "brute-force enumeration cap");
  codeinfo->add_option("--exact-cap", codeinfo_sbcap, "exact-delta cap for the bound");
  codeinfo->add_option("--seed", codeinfo_seed, "candidate-order seed for greedy fallbacks");

  // uncertainty
  std::string unc_function;
  std::optional<std::string> unc_subgroup;
  auto* uncertainty = app.add_subcommand("uncertainty", "Donoho-Stark style report");
  uncertainty->add_option("--function", unc_function, "JSON file with {group, field, values}")->required();
  uncertainty->add_option("--subgroup", unc_subgroup,
                          "JSON file with {group, elements}: restrict to this dual subgroup");

  // scan
  std::string scan_group;
  std::int64_t scan_max_order = 0;
  auto* scan = app.add_subcommand("scan", "equality-class census over sign patterns");
  scan->add_option("--group", scan_group, "group factors, e.g. [6]");
  scan->add_option("--max-order", scan_max_order, "scan every abelian group up to this order");

  // nearfact
  std::string nf_b, nf_n;
  auto* nearfact = app.add_subcommand("nearfact", "near-factorization check of B against N");
  nearfact->add_option("--B", nf_b, "JSON file with {group, elements}")->required();
  nearfact->add_option("--N", nf_n, "JSON file with {group, elements}")->required();

  for (CLI::App* sub : {transform, shiftbound, certify, verify, mindist, codeinfo, uncertainty,
                        scan, nearfact}) {
    sub->add_option("--output", output_path, "also write the JSON result to this path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (transform->parsed()) {
    abelian::GroupSpec g = abelian::io::group_from_json(parse_inline(transform_group, "group"));
    abelian::FieldCtx field =
        abelian::io::field_from_json(field_from_option(transform_field), g.exponent());
    json values = parse_inline(transform_values, "values");
    if (!values.is_array() || static_cast<std::int64_t>(values.size()) != g.order()) {
      throw abelian::parse_error("values: expected one entry per group element");
    }
    std::vector<abelian::FieldScalar> vals;
    for (const auto& v : values) vals.push_back(abelian::io::scalar_from_json(v, field));
    abelian::GAlgElem f(g, field, std::move(vals));
    abelian::GAlgElem result =
        transform_inverse ? abelian::inverse_transform(f) : abelian::fourier_transform(f);
    emit(abelian::io::function_to_json(result), output_path);
    return 0;
  }

  if (shiftbound->parsed() || certify->parsed()) {
    bool is_certify = certify->parsed();
    const std::string& path = is_certify ? certify_zeros : shiftbound_zeros;
    bool use_exact = is_certify ? cert_exact : sb_exact;
    bool use_greedy = is_certify ? cert_greedy : sb_greedy;
    std::uint64_t seed = is_certify ? cert_seed : sb_seed;
    std::int64_t cap = parse_cap(is_certify ? cert_cap : sb_cap);
    if (use_exact && use_greedy) throw abelian::parse_error("choose one of --exact and --greedy");

    json doc = read_json_file(path);
    abelian::GroupSpec g = abelian::io::group_from_json(abelian::io::json(doc.at("group")));
    abelian::CharSet zeros = abelian::io::charset_from_json(doc.at("zeros"), g);

    if (!is_certify && sb_field) {
      abelian::FieldCtx field =
          abelian::io::field_from_json(field_from_option(*sb_field), g.exponent());
      abelian::ShiftBoundBudget budget;
      budget.exact_cap = cap;
      budget.seed = seed;
      emit(abelian::io::to_json(abelian::code_shift_bound(zeros, field, budget)), output_path);
      return 0;
    }

    auto compute = [&]() -> std::pair<abelian::IndependentSet, bool> {
      if (use_greedy || (!use_exact && g.order() > cap)) {
        return {abelian::greedy_delta(zeros, seed), false};
      }
      return {abelian::exact_delta(zeros, cap).witness, true};
    };
    auto [witness, certified] = compute();
    if (is_certify) {
      emit(abelian::io::certificate_to_json(witness.certificate), output_path);
    } else {
      json out{{"delta", static_cast<std::int64_t>(witness.elements.size())},
               {"exact", certified},
               {"certificate", abelian::io::certificate_to_json(witness.certificate)}};
      emit(out, output_path);
    }
    return 0;
  }

  if (verify->parsed()) {
    abelian::ShiftCertificate cert = abelian::io::certificate_from_json(read_json_file(verify_file));
    abelian::VerifyResult result = abelian::verify_certificate(cert);
    if (result.accepted) {
      emit(json{{"t", result.size}}, output_path);
      return 0;
    }
    emit(json{{"failing_step", result.failing_step}, {"reason", result.reason}}, output_path);
    return 1;
  }

  if (mindist->parsed()) {
    abelian::io::CodeDescription desc =
        abelian::io::code_description_from_json(read_json_file(mindist_code));
    abelian::AbelianCode code = abelian::code_from_zeros(desc.group, desc.field, desc.zeros);
    std::int64_t d = abelian::min_weight_brute(code, parse_cap(mindist_cap));
    emit(json{{"dimension", code.dimension()}, {"d", d}}, output_path);
    return 0;
  }

  if (codeinfo->parsed()) {
    abelian::io::CodeDescription desc =
        abelian::io::code_description_from_json(read_json_file(codeinfo_code));
    abelian::AbelianCode code = abelian::code_from_zeros(desc.group, desc.field, desc.zeros);
    json out{{"length", code.length()},
             {"dimension", code.dimension()},
             {"complete_zeros", abelian::io::charset_to_json(code.complete_zeros())}};
    if (codeinfo_brute) out["d_bruteforce"] = abelian::min_weight_brute(code, parse_cap(codeinfo_cap));
    if (codeinfo_bound) {
      abelian::ShiftBoundBudget budget;
      budget.exact_cap = parse_cap(codeinfo_sbcap);
      budget.seed = codeinfo_seed;
      abelian::CodeShiftBound bound = abelian::code_shift_bound(desc.zeros, desc.field, budget);
      if (bound.degenerate) {
        out["degenerate"] = true;
      } else if (bound.certified) {
        out["d_certified"] = bound.bound;
      } else {
        out["d_heuristic"] = bound.bound;
      }
    }
    emit(out, output_path);
    return 0;
  }

  if (uncertainty->parsed()) {
    abelian::GAlgElem f = abelian::io::function_from_json(read_json_file(unc_function));
    json out = abelian::io::to_json(abelian::ds_report(f));
    if (unc_subgroup) {
      abelian::io::ElementSet s = abelian::io::element_set_from_json(read_json_file(*unc_subgroup));
      if (!(s.group == f.group())) {
        throw abelian::parse_error("subgroup file is over a different group");
      }
      abelian::Subgroup k = abelian::Subgroup::from_elements(s.group, s.elements);
      out["generalized"] = abelian::io::to_json(abelian::generalized_ds(f, k));
    }
    auto form = abelian::equality_classify(f);
    if (form) {
      out["coset_character_form"] =
          json{{"scale", abelian::io::scalar_to_json(form->scale)},
               {"character", abelian::io::elem_to_json(form->character)},
               {"representative", abelian::io::elem_to_json(form->representative)},
               {"subgroup", abelian::io::elems_to_json(form->subgroup.elements())}};
    }
    emit(out, output_path);
    return 0;
  }

  if (scan->parsed()) {
    if (scan_group.empty() && scan_max_order == 0) {
      throw abelian::parse_error("scan: give --group and/or --max-order");
    }
    json groups = json::array();
    auto scan_one = [&](const abelian::GroupSpec& g) {
      abelian::ScanSummary summary = abelian::scan_sign_patterns(g);
      json entry = abelian::io::to_json(summary);
      entry["group"] = abelian::io::group_to_json(g);
      groups.push_back(std::move(entry));
    };
    if (!scan_group.empty()) {
      scan_one(abelian::io::group_from_json(parse_inline(scan_group, "group")));
    }
    if (scan_max_order > 0) {
      // invariant-factor decompositions d_1 | d_2 | ... with product <= cap
      std::vector<std::vector<std::int64_t>> shapes;
      auto recurse = [&](auto&& self, std::vector<std::int64_t>& stack, std::int64_t product,
                         std::int64_t min_factor) -> void {
        if (!stack.empty()) shapes.push_back(stack);
        for (std::int64_t d = min_factor; product * d <= scan_max_order; ++d) {
          if (!stack.empty() && d % stack.back() != 0) continue;
          stack.push_back(d);
          self(self, stack, product * d, d);
          stack.pop_back();
        }
      };
      std::vector<std::int64_t> stack;
      recurse(recurse, stack, 1, 2);
      for (const auto& shape : shapes) scan_one(abelian::GroupSpec(shape));
    }
    emit(json{{"groups", groups}}, output_path);
    return 0;
  }

  if (nearfact->parsed()) {
    abelian::io::ElementSet b = abelian::io::element_set_from_json(read_json_file(nf_b));
    abelian::io::ElementSet n = abelian::io::element_set_from_json(read_json_file(nf_n));
    if (!(b.group == n.group)) throw abelian::parse_error("B and N are over different groups");
    emit(abelian::io::to_json(abelian::near_factorization_check(b.group, b.elements, n.elements)),
         output_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const abelian::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const abelian::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

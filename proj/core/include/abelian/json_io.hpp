#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelian/code.hpp"
#include "abelian/fourier.hpp"
#include "abelian/group.hpp"
#include "abelian/shift.hpp"
#include "abelian/uncertainty.hpp"

namespace abelian::io {

using nlohmann::json;

// Groups serialize as the factor array, elements as coordinate arrays,
// character sets as sorted arrays of coordinate arrays. Parsing is strict:
// coordinates must already lie in range.

json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const json& j);

json elem_to_json(const GElem& e);
GElem elem_from_json(const json& j, const GroupSpec& g);

json elems_to_json(const std::vector<GElem>& elems);
std::vector<GElem> elems_from_json(const json& j, const GroupSpec& g);

json charset_to_json(const CharSet& s);
CharSet charset_from_json(const json& j, const GroupSpec& g);

/// {"kind": ..., "p": ..., "q": ..., "N": ..., "modulus": [...]}. On input,
/// "kind" and "q" are optional (characteristic 0 selects the cyclotomic
/// backend, q defaults to p) and N may be omitted when a default is given.
/// A provided modulus is validated against the deterministic one.
json field_to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const json& j, std::optional<std::int64_t> default_root_order = {});

/// Finite scalars: coefficient array over F_p (or a bare integer).
/// Cyclotomic scalars: array of [num, den] pairs or integers.
json scalar_to_json(const FieldScalar& v);
FieldScalar scalar_from_json(const json& j, const FieldCtx& ctx);

/// {"group": ..., "field": ..., "values": [...]}
json function_to_json(const GAlgElem& f);
GAlgElem function_from_json(const json& j);

/// {"group": ..., "zeros": [...], "steps": [{"psi": ..., "alpha": ...}]}
json certificate_to_json(const ShiftCertificate& cert);
ShiftCertificate certificate_from_json(const json& j);

struct CodeDescription {
  GroupSpec group;
  FieldCtx field;
  CharSet zeros;
};

/// {"group": ..., "field": {"p": ..., "q": ...}, "zeros": [...]}
json code_description_to_json(const CodeDescription& d);
CodeDescription code_description_from_json(const json& j);

struct ElementSet {
  GroupSpec group;
  std::vector<GElem> elements;
};

/// {"group": ..., "elements": [...]}
json element_set_to_json(const ElementSet& s);
ElementSet element_set_from_json(const json& j);

json to_json(const UncertaintyReport& r);
json to_json(const GeneralizedDsResult& r);
json to_json(const NearFactorizationReport& r);
json to_json(const CodeShiftBound& r);
json to_json(const ScanSummary& r);

}  // namespace abelian::io

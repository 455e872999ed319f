#include "abelian/fourier.hpp"

#include <algorithm>
#include <set>

namespace abelian {

namespace {

void require_compatible(const GroupSpec& group, const FieldCtx& field, const char* where) {
  if (field.root_order() != group.exponent()) {
    throw domain_error(std::string(where) + ": field root order " +
                       std::to_string(field.root_order()) + " does not equal the group exponent " +
                       std::to_string(group.exponent()));
  }
}

}  // namespace

CharSet::CharSet(GroupSpec group, std::vector<GElem> elements) : group_(std::move(group)) {
  for (const GElem& e : elements) group_.require_member(e, "charset");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
  mask_.assign(static_cast<std::size_t>(group_.order()), 0);
  for (const GElem& e : elements_) mask_[static_cast<std::size_t>(group_.index(e))] = 1;
}

CharSet CharSet::empty(const GroupSpec& group) { return CharSet(group, {}); }

CharSet CharSet::full(const GroupSpec& group) { return CharSet(group, group.all_elements()); }

bool CharSet::contains(const GElem& e) const {
  if (!group_.contains(e)) return false;
  return mask_[static_cast<std::size_t>(group_.index(e))] != 0;
}

CharSet CharSet::complement() const {
  std::vector<GElem> out;
  for (std::int64_t i = 0; i < group_.order(); ++i) {
    if (!mask_[static_cast<std::size_t>(i)]) out.push_back(group_.element(i));
  }
  return CharSet(group_, std::move(out));
}

CharSet CharSet::union_with(const CharSet& other) const {
  if (!(group_ == other.group_)) throw domain_error("charset union: different groups");
  std::vector<GElem> out = elements_;
  out.insert(out.end(), other.elements_.begin(), other.elements_.end());
  return CharSet(group_, std::move(out));
}

GAlgElem::GAlgElem(GroupSpec group, FieldCtx field, std::vector<FieldScalar> values)
    : group_(std::move(group)), field_(std::move(field)), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != group_.order()) {
    throw domain_error("function: value count does not match the group order");
  }
  base_field_valued_ = true;
  for (const FieldScalar& v : values_) {
    field_.require_scalar(v);
    if (base_field_valued_ && !field_.in_base_field(v)) base_field_valued_ = false;
  }
}

GAlgElem GAlgElem::zero(const GroupSpec& group, const FieldCtx& field) {
  return GAlgElem(group, field,
                  std::vector<FieldScalar>(static_cast<std::size_t>(group.order()), field.zero()));
}

GAlgElem GAlgElem::delta(const GroupSpec& group, const FieldCtx& field, const GElem& at) {
  group.require_member(at, "delta");
  std::vector<FieldScalar> vals(static_cast<std::size_t>(group.order()), field.zero());
  vals[static_cast<std::size_t>(group.index(at))] = field.one();
  return GAlgElem(group, field, std::move(vals));
}

GAlgElem GAlgElem::indicator(const GroupSpec& group, const FieldCtx& field,
                             const std::vector<GElem>& support) {
  std::vector<FieldScalar> vals(static_cast<std::size_t>(group.order()), field.zero());
  for (const GElem& x : support) {
    group.require_member(x, "indicator");
    vals[static_cast<std::size_t>(group.index(x))] = field.one();
  }
  return GAlgElem(group, field, std::move(vals));
}

bool GAlgElem::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const FieldScalar& v) { return v.is_zero(); });
}

std::int64_t GAlgElem::weight() const {
  std::int64_t w = 0;
  for (const FieldScalar& v : values_) {
    if (!v.is_zero()) ++w;
  }
  return w;
}

GAlgElem GAlgElem::operator+(const GAlgElem& o) const {
  if (!(group_ == o.group_) || !(field_ == o.field_)) {
    throw domain_error("function addition: mismatched group or field");
  }
  std::vector<FieldScalar> vals;
  vals.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] + o.values_[i]);
  return GAlgElem(group_, field_, std::move(vals));
}

GAlgElem GAlgElem::operator-(const GAlgElem& o) const {
  if (!(group_ == o.group_) || !(field_ == o.field_)) {
    throw domain_error("function subtraction: mismatched group or field");
  }
  std::vector<FieldScalar> vals;
  vals.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] - o.values_[i]);
  return GAlgElem(group_, field_, std::move(vals));
}

GAlgElem GAlgElem::scaled(const FieldScalar& c) const {
  std::vector<FieldScalar> vals;
  vals.reserve(values_.size());
  for (const FieldScalar& v : values_) vals.push_back(v * c);
  return GAlgElem(group_, field_, std::move(vals));
}

bool GAlgElem::operator==(const GAlgElem& o) const {
  if (!(group_ == o.group_) || !(field_ == o.field_)) return false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] == o.values_[i])) return false;
  }
  return true;
}

FieldScalar character_eval(const GroupSpec& group, const GElem& e, const GElem& x,
                           const FieldCtx& field) {
  require_compatible(group, field, "character_eval");
  return field.root_power(group.pairing(e, x));
}

GAlgElem fourier_transform(const GAlgElem& f) {
  const GroupSpec& g = f.group();
  const FieldCtx& field = f.field();
  require_compatible(g, field, "fourier_transform");
  const std::int64_t n = g.order();
  std::vector<GElem> elems = g.all_elements();
  std::vector<std::int64_t> neg_index(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    neg_index[static_cast<std::size_t>(i)] = g.index(g.neg(elems[static_cast<std::size_t>(i)]));
  }
  std::vector<FieldScalar> out(static_cast<std::size_t>(n), field.zero());
  for (std::int64_t e = 0; e < n; ++e) {
    FieldScalar acc = field.zero();
    for (std::int64_t x = 0; x < n; ++x) {
      const FieldScalar& fx = f.value_at(x);
      if (fx.is_zero()) continue;
      std::int64_t k = g.pairing(elems[static_cast<std::size_t>(e)],
                                 elems[static_cast<std::size_t>(neg_index[static_cast<std::size_t>(x)])]);
      acc = acc + fx * field.root_power(k);
    }
    out[static_cast<std::size_t>(e)] = std::move(acc);
  }
  return GAlgElem(g, field, std::move(out));
}

GAlgElem inverse_transform(const GAlgElem& g_fn) {
  const GroupSpec& g = g_fn.group();
  const FieldCtx& field = g_fn.field();
  require_compatible(g, field, "inverse_transform");
  const std::int64_t n = g.order();
  FieldScalar n_inv = field.from_integer(n).inv();
  std::vector<GElem> elems = g.all_elements();
  std::vector<FieldScalar> out(static_cast<std::size_t>(n), field.zero());
  for (std::int64_t x = 0; x < n; ++x) {
    FieldScalar acc = field.zero();
    for (std::int64_t e = 0; e < n; ++e) {
      const FieldScalar& ge = g_fn.value_at(e);
      if (ge.is_zero()) continue;
      std::int64_t k = g.pairing(elems[static_cast<std::size_t>(e)], elems[static_cast<std::size_t>(x)]);
      acc = acc + ge * field.root_power(k);
    }
    out[static_cast<std::size_t>(x)] = acc * n_inv;
  }
  return GAlgElem(g, field, std::move(out));
}

GAlgElem convolve(const GAlgElem& f, const GAlgElem& h) {
  const GroupSpec& g = f.group();
  if (!(g == h.group()) || !(f.field() == h.field())) {
    throw domain_error("convolve: mismatched group or field");
  }
  const FieldCtx& field = f.field();
  const std::int64_t n = g.order();
  std::vector<GElem> elems = g.all_elements();
  // difference-index table: z - x
  std::vector<std::int64_t> sub_index(static_cast<std::size_t>(n * n));
  for (std::int64_t z = 0; z < n; ++z) {
    for (std::int64_t x = 0; x < n; ++x) {
      sub_index[static_cast<std::size_t>(z * n + x)] =
          g.index(g.sub(elems[static_cast<std::size_t>(z)], elems[static_cast<std::size_t>(x)]));
    }
  }
  std::vector<FieldScalar> out(static_cast<std::size_t>(n), field.zero());
  for (std::int64_t z = 0; z < n; ++z) {
    FieldScalar acc = field.zero();
    for (std::int64_t x = 0; x < n; ++x) {
      const FieldScalar& fx = f.value_at(x);
      if (fx.is_zero()) continue;
      const FieldScalar& hz = h.value_at(sub_index[static_cast<std::size_t>(z * n + x)]);
      if (hz.is_zero()) continue;
      acc = acc + fx * hz;
    }
    out[static_cast<std::size_t>(z)] = std::move(acc);
  }
  return GAlgElem(g, field, std::move(out));
}

std::vector<GElem> support(const GAlgElem& f) {
  std::vector<GElem> out;
  for (std::int64_t i = 0; i < f.group().order(); ++i) {
    if (!f.value_at(i).is_zero()) out.push_back(f.group().element(i));
  }
  return out;
}

CharSet zeros(const GAlgElem& f) {
  GAlgElem fhat = fourier_transform(f);
  std::vector<GElem> out;
  for (std::int64_t i = 0; i < f.group().order(); ++i) {
    if (fhat.value_at(i).is_zero()) out.push_back(f.group().element(i));
  }
  return CharSet(f.group(), std::move(out));
}

CharSet f_closure(const CharSet& z, const FieldCtx& field) {
  require_compatible(z.group(), field, "f_closure");
  std::vector<std::int64_t> multipliers = field.automorphism_orbit_multipliers();
  std::vector<GElem> out;
  for (const GElem& e : z.elements()) {
    for (std::int64_t k : multipliers) out.push_back(z.group().smul(k, e));
  }
  return CharSet(z.group(), std::move(out));
}

std::vector<std::vector<GElem>> conjugation_orbits(const CharSet& s, const FieldCtx& field) {
  require_compatible(s.group(), field, "conjugation_orbits");
  std::vector<std::int64_t> multipliers = field.automorphism_orbit_multipliers();
  std::set<GElem> remaining(s.elements().begin(), s.elements().end());
  std::vector<std::vector<GElem>> orbits;
  while (!remaining.empty()) {
    GElem seed = *remaining.begin();
    std::set<GElem> orbit;
    for (std::int64_t k : multipliers) orbit.insert(s.group().smul(k, seed));
    std::vector<GElem> sorted(orbit.begin(), orbit.end());
    for (const GElem& e : sorted) remaining.erase(e);
    orbits.push_back(std::move(sorted));
  }
  return orbits;
}

}  // namespace abelian

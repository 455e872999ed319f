#pragma once

#include <cstdint>
#include <vector>

#include "abelian/field.hpp"
#include "abelian/group.hpp"

namespace abelian {

/// Subset of the dual group; elements are character indices under the fixed
/// pairing, kept sorted in enumeration order.
class CharSet {
 public:
  CharSet(GroupSpec group, std::vector<GElem> elements);
  static CharSet empty(const GroupSpec& group);
  static CharSet full(const GroupSpec& group);

  const GroupSpec& group() const { return group_; }
  const std::vector<GElem>& elements() const { return elements_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  bool is_empty() const { return elements_.empty(); }
  bool is_full() const { return size() == group_.order(); }
  bool contains(const GElem& e) const;
  CharSet complement() const;
  CharSet union_with(const CharSet& other) const;

  /// Membership bitmap indexed by element index.
  const std::vector<char>& mask() const { return mask_; }

  bool operator==(const CharSet& o) const {
    return group_ == o.group_ && elements_ == o.elements_;
  }

 private:
  GroupSpec group_;
  std::vector<GElem> elements_;
  std::vector<char> mask_;
};

/// Dense function f: G -> E, doubling as a group-algebra element and a
/// codeword. Values are indexed by the group enumeration order. A flag
/// records whether every value lies in the base field F, which is what the
/// conjugation-closure facts about zero sets rely on.
class GAlgElem {
 public:
  GAlgElem(GroupSpec group, FieldCtx field, std::vector<FieldScalar> values);

  static GAlgElem zero(const GroupSpec& group, const FieldCtx& field);
  static GAlgElem delta(const GroupSpec& group, const FieldCtx& field, const GElem& at);
  static GAlgElem indicator(const GroupSpec& group, const FieldCtx& field,
                            const std::vector<GElem>& support);

  const GroupSpec& group() const { return group_; }
  const FieldCtx& field() const { return field_; }
  const std::vector<FieldScalar>& values() const { return values_; }
  const FieldScalar& value_at(std::int64_t index) const { return values_[static_cast<std::size_t>(index)]; }
  const FieldScalar& value(const GElem& x) const { return values_[static_cast<std::size_t>(group_.index(x))]; }

  bool base_field_valued() const { return base_field_valued_; }
  bool is_zero() const;
  std::int64_t weight() const;

  GAlgElem operator+(const GAlgElem& o) const;
  GAlgElem operator-(const GAlgElem& o) const;
  GAlgElem scaled(const FieldScalar& c) const;
  bool operator==(const GAlgElem& o) const;

 private:
  GroupSpec group_;
  FieldCtx field_;
  std::vector<FieldScalar> values_;
  bool base_field_valued_ = false;
};

/// chi_e(x) = xi^pairing(e, x). The field's root order must equal exp(G).
FieldScalar character_eval(const GroupSpec& group, const GElem& e, const GElem& x,
                           const FieldCtx& field);

/// fhat(chi_e) = sum_x f(x) chi_e(-x), computed by the defining sum.
GAlgElem fourier_transform(const GAlgElem& f);

/// g*(x) = |G|^{-1} sum_e g(chi_e) chi_e(x); exact inverse of the transform.
GAlgElem inverse_transform(const GAlgElem& g);

/// (f*g)(z) = sum_x f(x) g(z - x).
GAlgElem convolve(const GAlgElem& f, const GAlgElem& g);

/// Nonzero positions of f, in enumeration order.
std::vector<GElem> support(const GAlgElem& f);

/// Zeros of f in the dual: complement of supp(fhat).
CharSet zeros(const GAlgElem& f);

/// Closure of Z under e -> k*e for every automorphism orbit multiplier k.
CharSet f_closure(const CharSet& z, const FieldCtx& field);

/// Orbits of the elements of S under the multiplier action, each sorted,
/// ordered by their minimal element.
std::vector<std::vector<GElem>> conjugation_orbits(const CharSet& s, const FieldCtx& field);

}  // namespace abelian

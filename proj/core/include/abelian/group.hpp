#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelian/errors.hpp"

namespace abelian {

/// Element of a finite abelian group, stored as one coordinate per cyclic
/// factor, each reduced into [0, n_i).
struct GElem {
  std::vector<std::int64_t> coords;

  GElem() = default;
  GElem(std::initializer_list<std::int64_t> c) : coords(c) {}
  explicit GElem(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  // Coordinate-wise lexicographic order; for in-range elements this agrees
  // with the mixed-radix enumeration order of GroupSpec.
  auto operator<=>(const GElem&) const = default;

  std::string to_string() const;
};

/// A finite abelian group presented as Z_{n1} x ... x Z_{nr}.
///
/// Elements are enumerated in mixed-radix lexicographic order with the last
/// coordinate varying fastest; `element` and `index` convert both ways.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  std::size_t rank() const { return factors_.size(); }

  bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

  GElem zero() const;
  bool is_zero(const GElem& x) const;
  /// True when x has the right rank and every coordinate lies in [0, n_i).
  bool contains(const GElem& x) const;

  GElem element(std::int64_t index) const;
  std::int64_t index(const GElem& x) const;
  std::vector<GElem> all_elements() const;

  GElem add(const GElem& a, const GElem& b) const;
  GElem sub(const GElem& a, const GElem& b) const;
  GElem neg(const GElem& a) const;
  GElem smul(std::int64_t k, const GElem& a) const;
  /// Reduce arbitrary integer coordinates into canonical range.
  GElem reduce(const GElem& a) const;

  /// Duality pairing: sum_i (N/n_i) e_i x_i mod N, N = exponent.
  /// The character indexed by e evaluates at x as xi^pairing(e, x).
  std::int64_t pairing(const GElem& e, const GElem& x) const;

  /// Throws domain_error unless x is a member of this group.
  void require_member(const GElem& x, const char* where) const;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

/// Subgroup of a GroupSpec, stored as its full sorted element list plus a
/// small generating set. Groups at this scale are tiny; membership tests
/// dominate, so an index mask is kept as well.
class Subgroup {
 public:
  /// Validates closure under addition and negation and presence of zero.
  static Subgroup from_elements(const GroupSpec& parent, std::vector<GElem> elems);
  static Subgroup generated_by(const GroupSpec& parent, const std::vector<GElem>& gens);
  static Subgroup trivial(const GroupSpec& parent);
  static Subgroup full(const GroupSpec& parent);

  const GroupSpec& parent() const { return parent_; }
  const std::vector<GElem>& elements() const { return elements_; }
  const std::vector<GElem>& generators() const { return generators_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(const GElem& x) const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

 private:
  Subgroup(GroupSpec parent, std::vector<GElem> elems, std::vector<GElem> gens);

  GroupSpec parent_;
  std::vector<GElem> elements_;
  std::vector<GElem> generators_;
  std::vector<char> mask_;
};

/// make_group(factors): validated constructor for GroupSpec.
GroupSpec make_group(const std::vector<std::int64_t>& factors);

/// Annihilator of a set: { e | pairing(e, s) = 0 mod N for all s in S }.
/// For a subgroup H this is H-perp with |H||H^perp| = |G|. S must be nonempty.
Subgroup perp(const GroupSpec& g, const std::vector<GElem>& s);

/// Stabilizer H(S) = { g | g + S = S }. S must be nonempty.
Subgroup stabilizer(const GroupSpec& g, const std::vector<GElem>& s);

struct CosetDecomposition {
  GElem representative;  // minimal element of S in enumeration order
  Subgroup subgroup;
};

/// If S is a coset a+K, returns (a, K) with a the enumeration-minimal
/// element of S; otherwise empty. S must be nonempty.
std::optional<CosetDecomposition> is_coset(const GroupSpec& g, const std::vector<GElem>& s);

struct QuotientDecomposition {
  std::vector<GElem> b0;  // coset representatives of B in G/H(N)
  std::vector<GElem> d;   // N = H(N) - D
  bool covers_punctured_quotient = false;  // B0 + D = (G/H) \ {0}, all sums distinct
};

struct NearFactorizationReport {
  std::vector<GElem> difference;  // B - N, sorted
  std::int64_t stabilizer_size = 0;
  bool covers_complement_of_stabilizer = false;  // B - N == G \ H(N)
  bool direct_sum = false;                       // |B - N| == |B| * |N|
  bool near_factorization = false;               // both of the above
  std::optional<QuotientDecomposition> quotient;
};

/// Checks whether disjoint nonempty sets B, N satisfy B - N = G \ H(N) with
/// |B - N| = |B||N|, and reports the induced decomposition of the punctured
/// quotient group when they do.
NearFactorizationReport near_factorization_check(const GroupSpec& g,
                                                 const std::vector<GElem>& b,
                                                 const std::vector<GElem>& n);

/// Every subgroup of g, found by closing generator sets. Intended for
/// desk-scale groups only.
std::vector<Subgroup> all_subgroups(const GroupSpec& g);

}  // namespace abelian

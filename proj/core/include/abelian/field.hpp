#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "abelian/errors.hpp"

namespace abelian {

namespace detail {
struct FieldImpl;
}

class FieldCtx;

/// Exact scalar in the coefficient field E. Stored as a coefficient vector
/// over the prime field (finite contexts) or over Q (cyclotomic contexts),
/// canonically reduced modulo the defining polynomial of the context.
/// Immutable value type; all operations require matching contexts.
class FieldScalar {
 public:
  FieldScalar() = default;  // detached; any arithmetic on it throws

  bool valid() const { return impl_ != nullptr; }
  FieldCtx ctx() const;

  bool is_zero() const;
  bool is_one() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inv() const;
  FieldScalar pow(std::int64_t e) const;
  bool operator==(const FieldScalar& o) const;

  /// Coefficients over F_p, low degree first, length = total degree.
  const std::vector<std::int64_t>& finite_coeffs() const;
  /// Coefficients over Q, low degree first, length = phi(N).
  const std::vector<mpq_class>& rational_coeffs() const;

 private:
  friend struct detail::FieldImpl;
  friend class FieldCtx;

  using Repr = std::variant<std::monostate, std::vector<std::int64_t>, std::vector<mpq_class>>;

  FieldScalar(std::shared_ptr<const detail::FieldImpl> impl, Repr repr);

  std::shared_ptr<const detail::FieldImpl> impl_;
  Repr repr_;
};

/// Coefficient-field context: either the extension E = F_{q^m} of a finite
/// base field F = F_q = F_{p^s} with N | q^m - 1 and m minimal, or the
/// cyclotomic rationals Q[t]/Phi_N(t) over F = Q. Both contain a canonical
/// primitive N-th root of unity.
///
/// All defining choices are deterministic: the modulus is the
/// lexicographically least irreducible polynomial of the right degree (the
/// N-th cyclotomic polynomial in characteristic 0), and the root of unity is
/// g^((q^m-1)/N) for the least primitive element g in coefficient-vector
/// order (the class of t in characteristic 0).
class FieldCtx {
 public:
  enum class Kind { finite, cyclotomic };

  /// Finite backend. Requires p prime with gcd(p, n) = 1; the base field is
  /// F_{p^base_degree}.
  static FieldCtx finite(std::int64_t p, std::int64_t n, std::int64_t base_degree = 1);
  /// Characteristic-zero backend Q[t]/Phi_n(t).
  static FieldCtx rationals(std::int64_t n);
  /// Dispatch on characteristic: 0 selects the cyclotomic backend.
  static FieldCtx build(std::int64_t characteristic, std::int64_t n, std::int64_t base_degree = 1);

  FieldCtx() = default;
  bool valid() const { return impl_ != nullptr; }

  Kind kind() const;
  std::int64_t characteristic() const;  // p, or 0
  std::int64_t base_order() const;      // q = p^s; 0 in characteristic 0
  std::int64_t base_degree() const;     // s; 1 in characteristic 0
  std::int64_t extension_degree() const;  // m = [E : F]
  std::int64_t total_degree() const;      // [E : F_p] = s*m, or phi(N)
  std::int64_t root_order() const;        // N
  /// Defining polynomial, constant term first, monic; integer coefficients.
  std::vector<std::int64_t> modulus() const;

  bool operator==(const FieldCtx& o) const;

  FieldScalar zero() const;
  FieldScalar one() const;
  FieldScalar from_integer(std::int64_t v) const;
  FieldScalar from_rational(const mpq_class& v) const;
  /// Scalar from a raw coefficient vector (validated and reduced mod p).
  FieldScalar from_finite_coeffs(const std::vector<std::int64_t>& coeffs) const;
  FieldScalar from_rational_coeffs(const std::vector<mpq_class>& coeffs) const;

  FieldScalar root_of_unity() const;
  /// xi^(k mod N) from a precomputed table.
  FieldScalar root_power(std::int64_t k) const;

  /// Multipliers k on character indices realizing Aut(E/F) on roots of
  /// unity: {q^j mod N} for a finite base, all units mod N over Q.
  std::vector<std::int64_t> automorphism_orbit_multipliers() const;

  /// Throws domain_error unless the scalar carries this context.
  void require_scalar(const FieldScalar& a) const;

  /// Membership in the base field F (a^q == a, or degree-zero over Q).
  bool in_base_field(const FieldScalar& a) const;
  /// Coordinates of a over F in the basis {t^i : i < m}; entries lie in F.
  std::vector<FieldScalar> base_coords(const FieldScalar& a) const;

  /// The q elements of the base field in coefficient-vector order
  /// (index 0 is zero). Finite contexts only.
  std::vector<FieldScalar> base_field_elements() const;
  std::int64_t base_field_index(const FieldScalar& a) const;

 private:
  friend class FieldScalar;
  explicit FieldCtx(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  const detail::FieldImpl& impl() const;

  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// build_field per the module contract; characteristic 0 selects the
/// cyclotomic-rational backend.
inline FieldCtx build_field(std::int64_t characteristic, std::int64_t n,
                            std::int64_t base_degree = 1) {
  return FieldCtx::build(characteristic, n, base_degree);
}

}  // namespace abelian

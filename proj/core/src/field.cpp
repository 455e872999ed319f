#include "abelian/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace abelian {
namespace {

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_p(a, p);
  if (a == 0) throw domain_error("inverse of zero residue");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_p(t, p);
}

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors_i64(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---- polynomials over F_p; coefficient vectors, constant term first ----

using Poly = std::vector<std::int64_t>;

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t degree(const Poly& a) { return static_cast<std::int64_t>(a.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = 0;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v -= b[i];
    r[i] = mod_p(v, p);
  }
  normalize(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    }
  }
  normalize(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::int64_t p) {
  normalize(a);
  if (b.empty()) throw domain_error("polynomial division by zero");
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::int64_t lead_inv = inv_mod(b.back(), p);
  while (degree(a) >= degree(b)) {
    std::int64_t c = mod_p(a.back() * lead_inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_p(a[shift + i] - c * b[i], p);
    normalize(a);
  }
  normalize(q);
  return {std::move(q), std::move(a)};
}

Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  return poly_divmod(std::move(a), b, p).second;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    std::int64_t c = inv_mod(a.back(), p);
    for (auto& x : a) x = mod_p(x * c, p);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  return poly_rem(poly_mul(a, b, p), m, p);
}

Poly poly_powmod(Poly base, mpz_class e, const Poly& m, std::int64_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), m, p);
  while (e > 0) {
    if (mpz_tstbit(e.get_mpz_t(), 0)) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

// Extended Euclid inverse of a modulo m (gcd must be constant).
Poly poly_invmod(const Poly& a, const Poly& m, std::int64_t p) {
  Poly r0 = m, r1 = poly_rem(a, m, p);
  Poly t0, t1{1};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1, p);
    Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw domain_error("element is not invertible");
  std::int64_t c = inv_mod(r0[0], p);
  for (auto& x : t0) x = mod_p(x * c, p);
  return poly_rem(std::move(t0), m, p);
}

// Rabin irreducibility test for a monic polynomial over F_p.
bool is_irreducible(const Poly& f, std::int64_t p) {
  std::int64_t d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  Poly x{0, 1};
  mpz_class pz(static_cast<long>(p));
  for (std::int64_t ell : prime_divisors_i64(d)) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d / ell));
    Poly diff = poly_sub(poly_powmod(x, e, f, p), x, p);
    Poly g = poly_gcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
  return poly_powmod(x, e, f, p) == x;
}

// Lexicographically least monic irreducible of the given degree; candidates
// ordered by the counting value of the non-leading coefficient vector.
Poly least_irreducible(std::int64_t deg, std::int64_t p) {
  mpz_class count;
  mpz_class pz(static_cast<long>(p));
  mpz_pow_ui(count.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(deg));
  for (mpz_class v = 0; v < count; ++v) {
    Poly f(static_cast<std::size_t>(deg) + 1, 0);
    f[static_cast<std::size_t>(deg)] = 1;
    mpz_class rest = v;
    for (std::int64_t i = 0; i < deg; ++i) {
      mpz_class digit = rest % p;
      f[static_cast<std::size_t>(i)] = digit.get_si();
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw internal_error("no irreducible polynomial found");
}

// ---- integer factorization for multiplicative-order checks ----

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(mpz_class n, std::set<mpz_class>& primes) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    primes.insert(n);
    return;
  }
  for (std::int64_t d = 2; d < 100000; ++d) {
    if (mpz_class(d) * d > n) break;
    if (n % d == 0) {
      primes.insert(mpz_class(d));
      while (n % d == 0) n /= d;
      if (n == 1) return;
      if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        primes.insert(n);
        return;
      }
    }
  }
  if (n == 1) return;
  mpz_class f = pollard_rho(n);
  factor_into(f, primes);
  factor_into(n / f, primes);
}

// ---- polynomials over Q ----

using QPoly = std::vector<mpq_class>;

void qnormalize(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qnormalize(r);
  return r;
}

std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  qnormalize(a);
  if (b.empty()) throw domain_error("polynomial division by zero");
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  mpq_class lead_inv = mpq_class(1) / b.back();
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qnormalize(a);
  }
  qnormalize(q);
  return {std::move(q), std::move(a)};
}

QPoly qpoly_rem(QPoly a, const QPoly& b) { return qpoly_divmod(std::move(a), b).second; }

QPoly qpoly_invmod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = qpoly_rem(a, m);
  QPoly t0, t1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, rem] = qpoly_divmod(r0, r1);
    QPoly qt1 = qpoly_mul(q, t1);
    QPoly t2(std::max(t0.size(), qt1.size()), mpq_class(0));
    for (std::size_t i = 0; i < t2.size(); ++i) {
      if (i < t0.size()) t2[i] += t0[i];
      if (i < qt1.size()) t2[i] -= qt1[i];
    }
    qnormalize(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw domain_error("element is not invertible");
  mpq_class scale = mpq_class(1) / r0[0];
  for (auto& c : t0) c *= scale;
  return qpoly_rem(std::move(t0), m);
}

// N-th cyclotomic polynomial over Z: divide x^d - 1 by the cyclotomic
// polynomials of the proper divisors of d, for d running over divisors of N.
std::vector<std::int64_t> cyclotomic_poly(std::int64_t n) {
  std::map<std::int64_t, std::vector<std::int64_t>> memo;
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  for (std::int64_t d : divisors) {
    std::vector<std::int64_t> poly(static_cast<std::size_t>(d) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(d)] = 1;
    for (std::int64_t e : divisors) {
      if (e >= d || d % e != 0) continue;
      const auto& div = memo[e];
      std::vector<std::int64_t> quot(poly.size() - div.size() + 1, 0);
      std::vector<std::int64_t> rem = poly;
      for (std::size_t k = quot.size(); k-- > 0;) {
        std::int64_t c = rem[k + div.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < div.size(); ++i) rem[k + i] -= c * div[i];
      }
      for (std::int64_t r : rem) {
        if (r != 0) throw internal_error("cyclotomic division not exact");
      }
      poly = std::move(quot);
    }
    memo[d] = std::move(poly);
  }
  return memo[n];
}

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix matmul(const Matrix& a, const Matrix& b, std::int64_t p) {
  std::size_t d = a.size();
  Matrix c(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] = mod_p(c[i][j] + a[i][k] * b[k][j], p);
    }
  }
  return c;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::int64_t> rref(Matrix& rows, std::int64_t p) {
  std::vector<std::int64_t> pivots;
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows ? rows[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t sel = rank;
    while (sel < nrows && rows[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(rows[rank], rows[sel]);
    std::int64_t piv_inv = inv_mod(rows[rank][col], p);
    for (std::size_t j = 0; j < ncols; ++j) rows[rank][j] = mod_p(rows[rank][j] * piv_inv, p);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::int64_t c = rows[r][col];
      for (std::size_t j = 0; j < ncols; ++j) {
        rows[r][j] = mod_p(rows[r][j] - c * rows[rank][j], p);
      }
    }
    pivots.push_back(static_cast<std::int64_t>(col));
    ++rank;
  }
  return pivots;
}

}  // namespace

namespace detail {

struct FieldImpl {
  FieldCtx::Kind kind = FieldCtx::Kind::finite;
  std::int64_t p = 0;      // characteristic, 0 for cyclotomic
  std::int64_t s = 1;      // [F : F_p]
  std::int64_t m = 1;      // [E : F]
  std::int64_t total = 1;  // [E : F_p], or phi(N)
  std::int64_t n = 1;      // root order N
  std::int64_t q = 0;      // p^s, 0 for cyclotomic
  std::vector<std::int64_t> modulus;  // monic defining polynomial, constant first

  // finite backend
  std::vector<Poly> xi_pows_fin;
  std::vector<Poly> base_basis;  // F_p-basis of F inside E
  std::vector<Poly> base_elems;  // all q base-field elements, counting order
  std::map<Poly, std::int64_t> base_elem_index;
  Matrix frob_q;      // a -> a^q in the power basis
  Matrix coord_inv;   // inverse of the {t^i b_j} basis matrix

  // cyclotomic backend
  std::vector<QPoly> xi_pows_rat;

  bool same_structure(const FieldImpl& o) const {
    return kind == o.kind && p == o.p && s == o.s && n == o.n;
  }
};

}  // namespace detail

using detail::FieldImpl;

// ---------- FieldScalar ----------

FieldScalar::FieldScalar(std::shared_ptr<const FieldImpl> impl, Repr repr)
    : impl_(std::move(impl)), repr_(std::move(repr)) {}

FieldCtx FieldScalar::ctx() const {
  if (!impl_) throw domain_error("scalar has no field context");
  return FieldCtx(impl_);
}

const std::vector<std::int64_t>& FieldScalar::finite_coeffs() const {
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&repr_)) return *v;
  throw domain_error("scalar is not in a finite field context");
}

const std::vector<mpq_class>& FieldScalar::rational_coeffs() const {
  if (const auto* v = std::get_if<std::vector<mpq_class>>(&repr_)) return *v;
  throw domain_error("scalar is not in a cyclotomic context");
}

bool FieldScalar::is_zero() const {
  if (!impl_) throw domain_error("scalar has no field context");
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&repr_)) {
    return std::all_of(v->begin(), v->end(), [](std::int64_t c) { return c == 0; });
  }
  const auto& v = std::get<std::vector<mpq_class>>(repr_);
  return std::all_of(v.begin(), v.end(), [](const mpq_class& c) { return c == 0; });
}

bool FieldScalar::is_one() const {
  if (!impl_) throw domain_error("scalar has no field context");
  if (const auto* v = std::get_if<std::vector<std::int64_t>>(&repr_)) {
    if (v->empty() || (*v)[0] != 1) return false;
    return std::all_of(v->begin() + 1, v->end(), [](std::int64_t c) { return c == 0; });
  }
  const auto& v = std::get<std::vector<mpq_class>>(repr_);
  if (v.empty() || v[0] != 1) return false;
  return std::all_of(v.begin() + 1, v.end(), [](const mpq_class& c) { return c == 0; });
}

namespace {

void require_same(const std::shared_ptr<const FieldImpl>& ia,
                  const std::shared_ptr<const FieldImpl>& ib) {
  if (!ia || !ib) throw domain_error("scalar has no field context");
  if (ia.get() == ib.get()) return;
  if (!ia->same_structure(*ib)) throw domain_error("scalars from different field contexts");
}

}  // namespace

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same(impl_, o.impl_);
  if (impl_->kind == FieldCtx::Kind::finite) {
    const auto& a = std::get<std::vector<std::int64_t>>(repr_);
    const auto& b = std::get<std::vector<std::int64_t>>(o.repr_);
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_p(a[i] + b[i], impl_->p);
    return FieldScalar(impl_, std::move(r));
  }
  const auto& a = std::get<std::vector<mpq_class>>(repr_);
  const auto& b = std::get<std::vector<mpq_class>>(o.repr_);
  std::vector<mpq_class> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldScalar::operator-() const {
  if (!impl_) throw domain_error("scalar has no field context");
  if (impl_->kind == FieldCtx::Kind::finite) {
    const auto& a = std::get<std::vector<std::int64_t>>(repr_);
    std::vector<std::int64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_p(-a[i], impl_->p);
    return FieldScalar(impl_, std::move(r));
  }
  const auto& a = std::get<std::vector<mpq_class>>(repr_);
  std::vector<mpq_class> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same(impl_, o.impl_);
  if (impl_->kind == FieldCtx::Kind::finite) {
    const auto& a = std::get<std::vector<std::int64_t>>(repr_);
    const auto& b = std::get<std::vector<std::int64_t>>(o.repr_);
    Poly prod = poly_rem(poly_mul(a, b, impl_->p), impl_->modulus, impl_->p);
    prod.resize(static_cast<std::size_t>(impl_->total), 0);
    return FieldScalar(impl_, std::move(prod));
  }
  const auto& a = std::get<std::vector<mpq_class>>(repr_);
  const auto& b = std::get<std::vector<mpq_class>>(o.repr_);
  QPoly mod_poly(impl_->modulus.begin(), impl_->modulus.end());
  QPoly prod = qpoly_rem(qpoly_mul(a, b), mod_poly);
  prod.resize(static_cast<std::size_t>(impl_->total), mpq_class(0));
  return FieldScalar(impl_, std::move(prod));
}

FieldScalar FieldScalar::inv() const {
  if (!impl_) throw domain_error("scalar has no field context");
  if (is_zero()) throw domain_error("division by zero");
  if (impl_->kind == FieldCtx::Kind::finite) {
    Poly r = poly_invmod(std::get<std::vector<std::int64_t>>(repr_), impl_->modulus, impl_->p);
    r.resize(static_cast<std::size_t>(impl_->total), 0);
    return FieldScalar(impl_, std::move(r));
  }
  QPoly mod_poly(impl_->modulus.begin(), impl_->modulus.end());
  QPoly r = qpoly_invmod(std::get<std::vector<mpq_class>>(repr_), mod_poly);
  r.resize(static_cast<std::size_t>(impl_->total), mpq_class(0));
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inv(); }

FieldScalar FieldScalar::pow(std::int64_t e) const {
  if (!impl_) throw domain_error("scalar has no field context");
  if (e < 0) return inv().pow(-e);
  FieldScalar base = *this;
  FieldScalar result = FieldCtx(impl_).one();
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  require_same(impl_, o.impl_);
  return repr_ == o.repr_;
}

// ---------- FieldCtx ----------

const FieldImpl& FieldCtx::impl() const {
  if (!impl_) throw domain_error("field context is empty");
  return *impl_;
}

FieldCtx FieldCtx::build(std::int64_t characteristic, std::int64_t n, std::int64_t base_degree) {
  if (characteristic == 0) return rationals(n);
  return finite(characteristic, n, base_degree);
}

FieldCtx FieldCtx::finite(std::int64_t p, std::int64_t n, std::int64_t base_degree) {
  if (n <= 0) throw invalid_spec_error("field: root order must be positive");
  if (p < 2 || !is_prime_i64(p)) throw invalid_spec_error("field: characteristic must be prime");
  if (base_degree < 1) throw invalid_spec_error("field: base degree must be >= 1");
  if (n % p == 0) throw unsupported_error("field: characteristic divides the root order");

  auto impl = std::make_shared<FieldImpl>();
  impl->kind = Kind::finite;
  impl->p = p;
  impl->s = base_degree;
  impl->n = n;

  std::int64_t q = 1;
  for (std::int64_t i = 0; i < base_degree; ++i) {
    if (q > (std::int64_t{1} << 31) / p) throw invalid_spec_error("field: base order too large");
    q *= p;
  }
  impl->q = q;

  std::int64_t m = 1, pw = q % n;
  while (pw != 1 % n) {
    pw = (pw * (q % n)) % n;
    ++m;
    if (m > n) throw internal_error("multiplicative order computation failed");
  }
  impl->m = m;
  impl->total = base_degree * m;
  if (impl->total > 48) throw resource_error("field: extension degree too large");

  const std::int64_t d = impl->total;
  impl->modulus = least_irreducible(d, p);

  mpz_class group_order;
  mpz_class pz(static_cast<long>(p));
  mpz_pow_ui(group_order.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
  group_order -= 1;
  std::set<mpz_class> primes;
  factor_into(group_order, primes);

  // Least primitive element in coefficient-vector counting order.
  Poly generator;
  for (std::int64_t v = 1;; ++v) {
    Poly cand;
    std::int64_t rest = v;
    while (rest > 0) {
      cand.push_back(rest % p);
      rest /= p;
    }
    if (degree(cand) >= d) throw internal_error("no primitive element found");
    bool primitive = true;
    for (const mpz_class& ell : primes) {
      if (poly_powmod(cand, group_order / ell, impl->modulus, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = std::move(cand);
      break;
    }
  }

  Poly xi = poly_powmod(generator, group_order / n, impl->modulus, p);
  impl->xi_pows_fin.resize(static_cast<std::size_t>(n));
  Poly cur{1};
  for (std::int64_t k = 0; k < n; ++k) {
    Poly padded = cur;
    padded.resize(static_cast<std::size_t>(d), 0);
    impl->xi_pows_fin[static_cast<std::size_t>(k)] = std::move(padded);
    cur = poly_mulmod(cur, xi, impl->modulus, p);
  }
  if (cur != Poly{1}) throw internal_error("root of unity has wrong order");

  // p-power Frobenius as a matrix, then the q-power Frobenius.
  Matrix frob_p(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
  for (std::int64_t j = 0; j < d; ++j) {
    Poly tj(static_cast<std::size_t>(j) + 1, 0);
    tj[static_cast<std::size_t>(j)] = 1;
    Poly img = poly_powmod(tj, pz, impl->modulus, p);
    img.resize(static_cast<std::size_t>(d), 0);
    for (std::int64_t i = 0; i < d; ++i) {
      frob_p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(i)];
    }
  }
  Matrix frob_q = frob_p;
  for (std::int64_t i = 1; i < base_degree; ++i) frob_q = matmul(frob_p, frob_q, p);
  impl->frob_q = frob_q;

  // Base field = kernel of (frob_q - I).
  Matrix ker = frob_q;
  for (std::int64_t i = 0; i < d; ++i) {
    ker[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        mod_p(ker[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - 1, p);
  }
  std::vector<std::int64_t> pivots = rref(ker, p);
  std::vector<char> is_pivot(static_cast<std::size_t>(d), 0);
  for (std::int64_t c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  for (std::int64_t col = 0; col < d; ++col) {
    if (is_pivot[static_cast<std::size_t>(col)]) continue;
    Poly vec(static_cast<std::size_t>(d), 0);
    vec[static_cast<std::size_t>(col)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      vec[static_cast<std::size_t>(pivots[r])] = mod_p(-ker[r][static_cast<std::size_t>(col)], p);
    }
    impl->base_basis.push_back(std::move(vec));
  }
  if (static_cast<std::int64_t>(impl->base_basis.size()) != base_degree) {
    throw internal_error("base field has unexpected dimension");
  }

  auto counting_less = [](const Poly& a, const Poly& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  for (std::int64_t count = 0; count < q; ++count) {
    Poly acc(static_cast<std::size_t>(d), 0);
    std::int64_t rest = count;
    for (std::int64_t j = 0; j < base_degree; ++j) {
      std::int64_t digit = rest % p;
      rest /= p;
      if (digit == 0) continue;
      const Poly& bj = impl->base_basis[static_cast<std::size_t>(j)];
      for (std::int64_t i = 0; i < d; ++i) {
        acc[static_cast<std::size_t>(i)] = mod_p(acc[static_cast<std::size_t>(i)] + digit * bj[static_cast<std::size_t>(i)], p);
      }
    }
    impl->base_elems.push_back(std::move(acc));
  }
  std::sort(impl->base_elems.begin(), impl->base_elems.end(), counting_less);
  for (std::size_t i = 0; i < impl->base_elems.size(); ++i) {
    impl->base_elem_index[impl->base_elems[i]] = static_cast<std::int64_t>(i);
  }

  // Invert the matrix with columns t^i * b_j (i < m, j < s).
  Matrix aug(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(2 * d), 0));
  for (std::int64_t i = 0; i < m; ++i) {
    Poly ti(static_cast<std::size_t>(i) + 1, 0);
    ti[static_cast<std::size_t>(i)] = 1;
    for (std::int64_t j = 0; j < base_degree; ++j) {
      Poly col = poly_rem(poly_mul(ti, impl->base_basis[static_cast<std::size_t>(j)], p), impl->modulus, p);
      col.resize(static_cast<std::size_t>(d), 0);
      std::int64_t cidx = i * base_degree + j;
      for (std::int64_t r = 0; r < d; ++r) {
        aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)] = col[static_cast<std::size_t>(r)];
      }
    }
  }
  for (std::int64_t i = 0; i < d; ++i) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + i)] = 1;
  std::vector<std::int64_t> aug_pivots = rref(aug, p);
  if (static_cast<std::int64_t>(aug_pivots.size()) != d) throw internal_error("basis matrix is singular");
  impl->coord_inv.assign(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      impl->coord_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)];
    }
  }

  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::rationals(std::int64_t n) {
  if (n <= 0) throw invalid_spec_error("field: root order must be positive");
  auto impl = std::make_shared<FieldImpl>();
  impl->kind = Kind::cyclotomic;
  impl->p = 0;
  impl->s = 1;
  impl->q = 0;
  impl->n = n;
  impl->modulus = cyclotomic_poly(n);
  impl->total = static_cast<std::int64_t>(impl->modulus.size()) - 1;
  impl->m = impl->total;

  QPoly mod_poly(impl->modulus.begin(), impl->modulus.end());
  QPoly xi = qpoly_rem(QPoly{mpq_class(0), mpq_class(1)}, mod_poly);
  impl->xi_pows_rat.resize(static_cast<std::size_t>(n));
  QPoly cur{mpq_class(1)};
  for (std::int64_t k = 0; k < n; ++k) {
    QPoly padded = cur;
    padded.resize(static_cast<std::size_t>(impl->total), mpq_class(0));
    impl->xi_pows_rat[static_cast<std::size_t>(k)] = std::move(padded);
    cur = qpoly_rem(qpoly_mul(cur, xi), mod_poly);
  }
  return FieldCtx(std::move(impl));
}

FieldCtx::Kind FieldCtx::kind() const { return impl().kind; }
std::int64_t FieldCtx::characteristic() const { return impl().p; }
std::int64_t FieldCtx::base_order() const { return impl().q; }
std::int64_t FieldCtx::base_degree() const { return impl().s; }
std::int64_t FieldCtx::extension_degree() const { return impl().m; }
std::int64_t FieldCtx::total_degree() const { return impl().total; }
std::int64_t FieldCtx::root_order() const { return impl().n; }
std::vector<std::int64_t> FieldCtx::modulus() const { return impl().modulus; }

bool FieldCtx::operator==(const FieldCtx& o) const {
  if (!impl_ || !o.impl_) return impl_.get() == o.impl_.get();
  return impl_->same_structure(*o.impl_);
}

FieldScalar FieldCtx::zero() const {
  const auto& im = impl();
  if (im.kind == Kind::finite) {
    return FieldScalar(impl_, std::vector<std::int64_t>(static_cast<std::size_t>(im.total), 0));
  }
  return FieldScalar(impl_, std::vector<mpq_class>(static_cast<std::size_t>(im.total), mpq_class(0)));
}

FieldScalar FieldCtx::one() const { return from_integer(1); }

FieldScalar FieldCtx::from_integer(std::int64_t v) const {
  const auto& im = impl();
  if (im.kind == Kind::finite) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(im.total), 0);
    r[0] = mod_p(v, im.p);
    return FieldScalar(impl_, std::move(r));
  }
  std::vector<mpq_class> r(static_cast<std::size_t>(im.total), mpq_class(0));
  r[0] = v;
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldCtx::from_rational(const mpq_class& v) const {
  const auto& im = impl();
  if (im.kind != Kind::cyclotomic) throw domain_error("rational scalar needs a cyclotomic context");
  std::vector<mpq_class> r(static_cast<std::size_t>(im.total), mpq_class(0));
  r[0] = v;
  r[0].canonicalize();
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldCtx::from_finite_coeffs(const std::vector<std::int64_t>& coeffs) const {
  const auto& im = impl();
  if (im.kind != Kind::finite) throw domain_error("coefficient vector needs a finite context");
  if (static_cast<std::int64_t>(coeffs.size()) > im.total) {
    throw parse_error("scalar has too many coefficients");
  }
  std::vector<std::int64_t> r(static_cast<std::size_t>(im.total), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r[i] = mod_p(coeffs[i], im.p);
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldCtx::from_rational_coeffs(const std::vector<mpq_class>& coeffs) const {
  const auto& im = impl();
  if (im.kind != Kind::cyclotomic) {
    throw domain_error("rational coefficients need a cyclotomic context");
  }
  if (static_cast<std::int64_t>(coeffs.size()) > im.total) {
    throw parse_error("scalar has too many coefficients");
  }
  std::vector<mpq_class> r(static_cast<std::size_t>(im.total), mpq_class(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    r[i] = coeffs[i];
    r[i].canonicalize();
  }
  return FieldScalar(impl_, std::move(r));
}

FieldScalar FieldCtx::root_of_unity() const { return root_power(1); }

FieldScalar FieldCtx::root_power(std::int64_t k) const {
  const auto& im = impl();
  std::int64_t idx = mod_p(k, im.n);
  if (im.kind == Kind::finite) {
    return FieldScalar(impl_, im.xi_pows_fin[static_cast<std::size_t>(idx)]);
  }
  return FieldScalar(impl_, im.xi_pows_rat[static_cast<std::size_t>(idx)]);
}

std::vector<std::int64_t> FieldCtx::automorphism_orbit_multipliers() const {
  const auto& im = impl();
  std::set<std::int64_t> out;
  if (im.kind == Kind::finite) {
    std::int64_t k = 1 % im.n;
    while (!out.count(k)) {
      out.insert(k);
      k = (k * (im.q % im.n)) % im.n;
    }
  } else {
    for (std::int64_t k = 0; k < im.n; ++k) {
      if (std::gcd(k, im.n) == 1) out.insert(k);
    }
  }
  return std::vector<std::int64_t>(out.begin(), out.end());
}

void FieldCtx::require_scalar(const FieldScalar& a) const {
  if (!a.impl_) throw domain_error("scalar has no field context");
  if (a.impl_.get() == impl_.get()) return;
  if (!a.impl_->same_structure(impl())) throw domain_error("scalar from a different field context");
}

bool FieldCtx::in_base_field(const FieldScalar& a) const {
  const auto& im = impl();
  require_scalar(a);
  if (im.kind == Kind::cyclotomic) {
    const auto& v = a.rational_coeffs();
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] != 0) return false;
    }
    return true;
  }
  const auto& v = a.finite_coeffs();
  for (std::int64_t i = 0; i < im.total; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j < im.total; ++j) {
      acc = mod_p(acc + im.frob_q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                            v[static_cast<std::size_t>(j)],
                  im.p);
    }
    if (acc != v[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::vector<FieldScalar> FieldCtx::base_coords(const FieldScalar& a) const {
  const auto& im = impl();
  require_scalar(a);
  if (im.kind == Kind::cyclotomic) {
    const auto& v = a.rational_coeffs();
    std::vector<FieldScalar> out;
    out.reserve(v.size());
    for (const mpq_class& c : v) out.push_back(from_rational(c));
    return out;
  }
  const auto& v = a.finite_coeffs();
  std::vector<std::int64_t> y(static_cast<std::size_t>(im.total), 0);
  for (std::int64_t i = 0; i < im.total; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j < im.total; ++j) {
      acc = mod_p(acc + im.coord_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                            v[static_cast<std::size_t>(j)],
                  im.p);
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
  std::vector<FieldScalar> out;
  out.reserve(static_cast<std::size_t>(im.m));
  for (std::int64_t i = 0; i < im.m; ++i) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(im.total), 0);
    for (std::int64_t j = 0; j < im.s; ++j) {
      std::int64_t c = y[static_cast<std::size_t>(i * im.s + j)];
      if (c == 0) continue;
      const Poly& bj = im.base_basis[static_cast<std::size_t>(j)];
      for (std::int64_t k = 0; k < im.total; ++k) {
        acc[static_cast<std::size_t>(k)] =
            mod_p(acc[static_cast<std::size_t>(k)] + c * bj[static_cast<std::size_t>(k)], im.p);
      }
    }
    out.push_back(FieldScalar(impl_, std::move(acc)));
  }
  return out;
}

std::vector<FieldScalar> FieldCtx::base_field_elements() const {
  const auto& im = impl();
  if (im.kind != Kind::finite) throw domain_error("base field enumeration needs a finite context");
  std::vector<FieldScalar> out;
  out.reserve(im.base_elems.size());
  for (const Poly& e : im.base_elems) out.push_back(FieldScalar(impl_, e));
  return out;
}

std::int64_t FieldCtx::base_field_index(const FieldScalar& a) const {
  const auto& im = impl();
  if (im.kind != Kind::finite) throw domain_error("base field enumeration needs a finite context");
  require_scalar(a);
  auto it = im.base_elem_index.find(a.finite_coeffs());
  if (it == im.base_elem_index.end()) throw domain_error("scalar is not in the base field");
  return it->second;
}

}  // namespace abelian

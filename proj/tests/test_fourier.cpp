#include "abelian/fourier.hpp"

#include <random>
#include <set>

#include "doctest.h"

using namespace abelian;

namespace {

GAlgElem random_function(const GroupSpec& g, const FieldCtx& field, std::mt19937_64& rng,
                         bool base_only = false) {
  std::vector<FieldScalar> vals;
  vals.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (field.kind() == FieldCtx::Kind::finite) {
      if (base_only) {
        auto base = field.base_field_elements();
        vals.push_back(base[static_cast<std::size_t>(rng() % base.size())]);
      } else {
        std::vector<std::int64_t> c(static_cast<std::size_t>(field.total_degree()));
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(field.characteristic()));
        vals.push_back(field.from_finite_coeffs(c));
      }
    } else {
      vals.push_back(field.from_integer(static_cast<std::int64_t>(rng() % 7) - 3));
    }
  }
  return GAlgElem(g, field, std::move(vals));
}

}  // namespace

TEST_CASE("character evaluation") {
  GroupSpec z7 = make_group({7});
  FieldCtx f8 = build_field(2, 7);
  CHECK(character_eval(z7, GElem{1}, GElem{1}, f8) == f8.root_of_unity());
  for (std::int64_t i = 0; i < 7; ++i) {
    CHECK(character_eval(z7, GElem{0}, z7.element(i), f8).is_one());
  }
  // homomorphism in the index
  std::mt19937_64 rng(23);
  GroupSpec g = make_group({2, 4});
  FieldCtx f9 = build_field(3, 4);
  for (int trial = 0; trial < 50; ++trial) {
    GElem a = g.element(static_cast<std::int64_t>(rng() % g.order()));
    GElem b = g.element(static_cast<std::int64_t>(rng() % g.order()));
    GElem x = g.element(static_cast<std::int64_t>(rng() % g.order()));
    CHECK(character_eval(g, g.add(a, b), x, f9) ==
          character_eval(g, a, x, f9) * character_eval(g, b, x, f9));
  }
  // root order must match the exponent
  CHECK_THROWS_AS(character_eval(z7, GElem{1}, GElem{1}, build_field(2, 15)), domain_error);
}

TEST_CASE("transform of delta and constant functions") {
  GroupSpec g = make_group({3, 3});
  FieldCtx field = build_field(2, 3);  // F_4

  GAlgElem d0 = GAlgElem::delta(g, field, g.zero());
  GAlgElem d0hat = fourier_transform(d0);
  for (std::int64_t i = 0; i < g.order(); ++i) CHECK(d0hat.value_at(i).is_one());

  GAlgElem ones = GAlgElem::indicator(g, field, g.all_elements());
  GAlgElem oneshat = fourier_transform(ones);
  CHECK(oneshat.value(g.zero()) == field.from_integer(g.order()));
  for (std::int64_t i = 1; i < g.order(); ++i) CHECK(oneshat.value_at(i).is_zero());
}

TEST_CASE("transform of a delta pair is supported off the annihilator") {
  for (auto factors : std::vector<std::vector<std::int64_t>>{{6}, {2, 4}, {3, 3}}) {
    GroupSpec g = make_group(factors);
    FieldCtx field = build_field(0, g.exponent());
    for (std::int64_t ai = 1; ai < g.order(); ++ai) {
      GElem a = g.element(ai);
      GAlgElem f = GAlgElem::delta(g, field, g.zero()) - GAlgElem::delta(g, field, a);
      GAlgElem fhat = fourier_transform(f);
      Subgroup ann = perp(g, {a});
      for (std::int64_t e = 0; e < g.order(); ++e) {
        CHECK(fhat.value_at(e).is_zero() == ann.contains(g.element(e)));
      }
      CHECK(f.weight() == 2);
      CHECK(fhat.weight() == g.order() - ann.size());
    }
  }
}

TEST_CASE("inverse transform roundtrip") {
  std::mt19937_64 rng(3);
  GroupSpec z6 = make_group({6});
  FieldCtx f7 = build_field(7, 6);
  CHECK(f7.total_degree() == 1);
  for (int trial = 0; trial < 30; ++trial) {
    GAlgElem f = random_function(z6, f7, rng);
    CHECK(inverse_transform(fourier_transform(f)) == f);
  }
  // delta at the trivial character inverts to the constant |G|^{-1}
  GAlgElem d = GAlgElem::delta(z6, f7, z6.zero());
  GAlgElem c = inverse_transform(d);
  FieldScalar expected = f7.from_integer(6).inv();
  for (std::int64_t i = 0; i < 6; ++i) CHECK(c.value_at(i) == expected);
  // indicator of a subgroup roundtrips too
  GAlgElem ih = GAlgElem::indicator(z6, f7, {GElem{0}, GElem{2}, GElem{4}});
  CHECK(inverse_transform(fourier_transform(ih)) == ih);
}

TEST_CASE("convolution identities") {
  GroupSpec g = make_group({2, 4});
  FieldCtx field = build_field(3, 4);  // F_9
  std::mt19937_64 rng(9);

  GAlgElem f = random_function(g, field, rng);
  CHECK(convolve(f, GAlgElem::delta(g, field, g.zero())) == f);

  // chi * chi' = |G| chi or 0
  auto character_fn = [&](const GElem& e) {
    std::vector<FieldScalar> vals;
    for (std::int64_t x = 0; x < g.order(); ++x) {
      vals.push_back(character_eval(g, e, g.element(x), field));
    }
    return GAlgElem(g, field, std::move(vals));
  };
  GAlgElem chi = character_fn(GElem{1, 2});
  GAlgElem chi2 = character_fn(GElem{0, 3});
  CHECK(convolve(chi, chi) == chi.scaled(field.from_integer(g.order())));
  CHECK(convolve(chi, chi2).is_zero());

  // eigenfunction law f * chi = fhat(chi) chi
  GAlgElem fhat = fourier_transform(f);
  for (std::int64_t e = 0; e < g.order(); ++e) {
    GAlgElem chie = character_fn(g.element(e));
    CHECK(convolve(f, chie) == chie.scaled(fhat.value_at(e)));
  }

  // convolution theorem
  GAlgElem h = random_function(g, field, rng);
  GAlgElem lhs = fourier_transform(convolve(f, h));
  GAlgElem hhat = fourier_transform(h);
  for (std::int64_t e = 0; e < g.order(); ++e) {
    CHECK(lhs.value_at(e) == fhat.value_at(e) * hhat.value_at(e));
  }
}

TEST_CASE("support and zeros") {
  GroupSpec z6 = make_group({6});
  FieldCtx f7 = build_field(7, 6);
  CHECK(support(GAlgElem::zero(z6, f7)).empty());

  GAlgElem d = GAlgElem::delta(z6, f7, GElem{2});
  CHECK(support(d) == std::vector<GElem>{GElem{2}});
  CHECK(zeros(d).is_empty());
}

TEST_CASE("orthogonality sums over subgroups") {
  for (auto factors : std::vector<std::vector<std::int64_t>>{{8}, {2, 6}, {2, 2, 2}, {3, 4}}) {
    GroupSpec g = make_group(factors);
    FieldCtx field = build_field(0, g.exponent());
    for (const Subgroup& h : all_subgroups(g)) {
      Subgroup hp = perp(g, h.elements());
      for (std::int64_t e = 0; e < g.order(); ++e) {
        FieldScalar sum = field.zero();
        for (const GElem& y : h.elements()) {
          sum = sum + character_eval(g, g.element(e), y, field);
        }
        if (hp.contains(g.element(e))) {
          CHECK(sum == field.from_integer(h.size()));
        } else {
          CHECK(sum.is_zero());
        }
      }
    }
  }
}

TEST_CASE("f-closure") {
  GroupSpec g = make_group({7, 7});
  FieldCtx f8 = build_field(2, 7);
  CharSet z(g, {GElem{1, 1}});
  CharSet closed = f_closure(z, f8);
  CHECK(closed.elements() == std::vector<GElem>{GElem{1, 1}, GElem{2, 2}, GElem{4, 4}});
  CHECK(f_closure(closed, f8) == closed);

  CHECK(f_closure(CharSet::empty(g), f8).is_empty());
  CHECK(f_closure(CharSet::full(g), f8).is_full());

  GroupSpec z7 = make_group({7});
  CharSet one(z7, {GElem{1}});
  CHECK(f_closure(one, build_field(2, 7)).elements() ==
        std::vector<GElem>{GElem{1}, GElem{2}, GElem{4}});
}

TEST_CASE("zero sets of base-field-valued functions are F-closed") {
  std::mt19937_64 rng(31);
  for (auto [p, factors] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
           {2, {7}}, {2, {3, 3}}, {3, {8}}, {5, {6}}}) {
    GroupSpec g = make_group(factors);
    FieldCtx field = build_field(p, g.exponent());
    for (int trial = 0; trial < 20; ++trial) {
      GAlgElem f = random_function(g, field, rng, /*base_only=*/true);
      CHECK(f.base_field_valued());
      CharSet z = zeros(f);
      CHECK(f_closure(z, field) == z);
    }
  }
}

TEST_CASE("coset-supported transform structure") {
  // if supp(fhat) is a coset phi + K then supp(f) is a union of K-perp cosets,
  // and the support product reaches |G| exactly for a single coset of K-perp
  GroupSpec g = make_group({2, 4});
  FieldCtx field = build_field(0, 4);
  std::mt19937_64 rng(41);
  for (const Subgroup& k : all_subgroups(g)) {
    for (int trial = 0; trial < 6; ++trial) {
      GElem phi = g.element(static_cast<std::int64_t>(rng() % g.order()));
      // build fhat supported exactly on phi + K with nonzero random values
      std::vector<FieldScalar> vals(static_cast<std::size_t>(g.order()), field.zero());
      for (const GElem& e : k.elements()) {
        vals[static_cast<std::size_t>(g.index(g.add(phi, e)))] =
            field.from_integer(1 + static_cast<std::int64_t>(rng() % 5));
      }
      GAlgElem fhat(g, field, std::move(vals));
      GAlgElem f = inverse_transform(fhat);
      Subgroup kp = perp(g, k.elements());
      std::vector<GElem> supp = support(f);
      // union of K-perp cosets
      std::set<GElem> sset(supp.begin(), supp.end());
      for (const GElem& x : supp) {
        for (const GElem& e : kp.elements()) CHECK(sset.count(g.add(x, e)) == 1);
      }
      CHECK(static_cast<std::int64_t>(supp.size()) % kp.size() == 0);
    }
  }
}

#include "abelian/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace abelian {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 40;

}  // namespace

std::string GElem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw invalid_spec_error("group: factor list is empty");
  for (std::int64_t n : factors_) {
    if (n <= 0) throw invalid_spec_error("group: factors must be positive");
    if (order_ > kMaxOrder / n) throw invalid_spec_error("group: order too large");
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

GroupSpec make_group(const std::vector<std::int64_t>& factors) { return GroupSpec(factors); }

GElem GroupSpec::zero() const { return GElem(std::vector<std::int64_t>(rank(), 0)); }

bool GroupSpec::is_zero(const GElem& x) const {
  require_member(x, "is_zero");
  return std::all_of(x.coords.begin(), x.coords.end(), [](std::int64_t c) { return c == 0; });
}

bool GroupSpec::contains(const GElem& x) const {
  if (x.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void GroupSpec::require_member(const GElem& x, const char* where) const {
  if (!contains(x)) {
    throw domain_error(std::string(where) + ": element " + x.to_string() +
                       " does not belong to the group");
  }
}

GElem GroupSpec::element(std::int64_t index) const {
  if (index < 0 || index >= order_) throw domain_error("element: index out of range");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    c[i] = index % factors_[i];
    index /= factors_[i];
  }
  return GElem(std::move(c));
}

std::int64_t GroupSpec::index(const GElem& x) const {
  require_member(x, "index");
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * factors_[i] + x.coords[i];
  return idx;
}

std::vector<GElem> GroupSpec::all_elements() const {
  std::vector<GElem> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

GElem GroupSpec::add(const GElem& a, const GElem& b) const {
  require_member(a, "add");
  require_member(b, "add");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod(a.coords[i] + b.coords[i], factors_[i]);
  return GElem(std::move(c));
}

GElem GroupSpec::sub(const GElem& a, const GElem& b) const {
  require_member(a, "sub");
  require_member(b, "sub");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod(a.coords[i] - b.coords[i], factors_[i]);
  return GElem(std::move(c));
}

GElem GroupSpec::neg(const GElem& a) const {
  require_member(a, "neg");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod(-a.coords[i], factors_[i]);
  return GElem(std::move(c));
}

GElem GroupSpec::smul(std::int64_t k, const GElem& a) const {
  require_member(a, "smul");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod(mod(k, factors_[i]) * a.coords[i], factors_[i]);
  return GElem(std::move(c));
}

GElem GroupSpec::reduce(const GElem& a) const {
  if (a.coords.size() != rank()) throw domain_error("reduce: wrong coordinate count");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = mod(a.coords[i], factors_[i]);
  return GElem(std::move(c));
}

std::int64_t GroupSpec::pairing(const GElem& e, const GElem& x) const {
  require_member(e, "pairing");
  require_member(x, "pairing");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t w = exponent_ / factors_[i];
    acc = mod(acc + mod(w * e.coords[i], exponent_) * x.coords[i], exponent_);
  }
  return acc;
}

Subgroup::Subgroup(GroupSpec parent, std::vector<GElem> elems, std::vector<GElem> gens)
    : parent_(std::move(parent)), elements_(std::move(elems)), generators_(std::move(gens)) {
  mask_.assign(static_cast<std::size_t>(parent_.order()), 0);
  for (const GElem& e : elements_) mask_[static_cast<std::size_t>(parent_.index(e))] = 1;
}

bool Subgroup::contains(const GElem& x) const {
  if (!parent_.contains(x)) return false;
  return mask_[static_cast<std::size_t>(parent_.index(x))] != 0;
}

namespace {

// Closure of a generating set under addition; returns sorted elements.
std::vector<GElem> close_under_addition(const GroupSpec& g, const std::vector<GElem>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<GElem> frontier{g.zero()};
  seen[static_cast<std::size_t>(g.index(g.zero()))] = 1;
  std::vector<GElem> result{g.zero()};
  while (!frontier.empty()) {
    std::vector<GElem> next;
    for (const GElem& x : frontier) {
      for (const GElem& gen : gens) {
        GElem y = g.add(x, gen);
        std::size_t idx = static_cast<std::size_t>(g.index(y));
        if (!seen[idx]) {
          seen[idx] = 1;
          result.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Greedy small generating set for a subgroup given as a sorted element list.
std::vector<GElem> pick_generators(const GroupSpec& g, const std::vector<GElem>& elems) {
  std::vector<GElem> gens;
  std::set<GElem> covered{g.zero()};
  for (const GElem& e : elems) {
    if (covered.count(e)) continue;
    gens.push_back(e);
    auto closure = close_under_addition(g, gens);
    covered = std::set<GElem>(closure.begin(), closure.end());
    if (covered.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup Subgroup::from_elements(const GroupSpec& parent, std::vector<GElem> elems) {
  if (elems.empty()) throw domain_error("subgroup: element list is empty");
  for (const GElem& e : elems) parent.require_member(e, "subgroup");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::set<GElem> members(elems.begin(), elems.end());
  if (!members.count(parent.zero())) throw domain_error("subgroup: missing zero element");
  for (const GElem& a : elems) {
    if (!members.count(parent.neg(a))) throw domain_error("subgroup: not closed under negation");
    for (const GElem& b : elems) {
      if (!members.count(parent.add(a, b))) throw domain_error("subgroup: not closed under addition");
    }
  }
  std::vector<GElem> gens = pick_generators(parent, elems);
  return Subgroup(parent, std::move(elems), std::move(gens));
}

Subgroup Subgroup::generated_by(const GroupSpec& parent, const std::vector<GElem>& gens) {
  for (const GElem& e : gens) parent.require_member(e, "subgroup");
  std::vector<GElem> elems = close_under_addition(parent, gens);
  std::vector<GElem> small = pick_generators(parent, elems);
  return Subgroup(parent, std::move(elems), std::move(small));
}

Subgroup Subgroup::trivial(const GroupSpec& parent) {
  return Subgroup(parent, {parent.zero()}, {});
}

Subgroup Subgroup::full(const GroupSpec& parent) {
  std::vector<GElem> elems = parent.all_elements();
  std::sort(elems.begin(), elems.end());
  return Subgroup(parent, std::move(elems), pick_generators(parent, elems));
}

Subgroup perp(const GroupSpec& g, const std::vector<GElem>& s) {
  if (s.empty()) throw domain_error("perp: set is empty");
  for (const GElem& x : s) g.require_member(x, "perp");
  std::vector<GElem> out;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    GElem e = g.element(i);
    bool annihilates = true;
    for (const GElem& x : s) {
      if (g.pairing(e, x) != 0) {
        annihilates = false;
        break;
      }
    }
    if (annihilates) out.push_back(e);
  }
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup stabilizer(const GroupSpec& g, const std::vector<GElem>& s) {
  if (s.empty()) throw domain_error("stabilizer: set is empty");
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  for (const GElem& x : s) {
    g.require_member(x, "stabilizer");
    member[static_cast<std::size_t>(g.index(x))] = 1;
  }
  std::vector<GElem> out;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    GElem h = g.element(i);
    bool stabilizes = true;
    for (const GElem& x : s) {
      if (!member[static_cast<std::size_t>(g.index(g.add(h, x)))]) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) out.push_back(h);
  }
  return Subgroup::from_elements(g, std::move(out));
}

std::optional<CosetDecomposition> is_coset(const GroupSpec& g, const std::vector<GElem>& s) {
  if (s.empty()) throw domain_error("is_coset: set is empty");
  std::vector<GElem> sorted = s;
  for (const GElem& x : sorted) g.require_member(x, "is_coset");
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const GElem& rep = sorted.front();
  std::vector<GElem> shifted;
  shifted.reserve(sorted.size());
  for (const GElem& x : sorted) shifted.push_back(g.sub(x, rep));
  std::set<GElem> members(shifted.begin(), shifted.end());
  for (const GElem& a : shifted) {
    if (!members.count(g.neg(a))) return std::nullopt;
    for (const GElem& b : shifted) {
      if (!members.count(g.add(a, b))) return std::nullopt;
    }
  }
  return CosetDecomposition{rep, Subgroup::from_elements(g, std::move(shifted))};
}

NearFactorizationReport near_factorization_check(const GroupSpec& g,
                                                 const std::vector<GElem>& b,
                                                 const std::vector<GElem>& n) {
  if (b.empty() || n.empty()) throw precondition_error("near_factorization: sets must be nonempty");
  std::set<GElem> bset, nset;
  for (const GElem& x : b) {
    g.require_member(x, "near_factorization");
    bset.insert(x);
  }
  for (const GElem& x : n) {
    g.require_member(x, "near_factorization");
    nset.insert(x);
  }
  for (const GElem& x : bset) {
    if (nset.count(x)) throw precondition_error("near_factorization: B and N are not disjoint");
  }

  NearFactorizationReport report;
  std::set<GElem> diff;
  for (const GElem& x : bset) {
    for (const GElem& y : nset) diff.insert(g.sub(x, y));
  }
  report.difference.assign(diff.begin(), diff.end());
  report.direct_sum =
      diff.size() == bset.size() * nset.size();

  Subgroup h = stabilizer(g, std::vector<GElem>(nset.begin(), nset.end()));
  report.stabilizer_size = h.size();
  bool covers = true;
  for (std::int64_t i = 0; i < g.order() && covers; ++i) {
    GElem x = g.element(i);
    bool in_diff = diff.count(x) != 0;
    bool in_h = h.contains(x);
    if (in_diff == in_h) covers = false;  // must partition G
  }
  report.covers_complement_of_stabilizer = covers;
  report.near_factorization = covers && report.direct_sum;

  if (report.near_factorization) {
    // Quotient view: with H = H(N), N is a union of H-cosets, N = H - D.
    // Representing each coset by its minimal element, B0 + D must cover the
    // punctured quotient exactly once.
    auto coset_rep = [&](const GElem& x) {
      GElem best = x;
      for (const GElem& hh : h.elements()) best = std::min(best, g.add(x, hh));
      return best;
    };
    QuotientDecomposition q;
    std::set<GElem> b0, d;
    for (const GElem& x : bset) b0.insert(coset_rep(x));
    for (const GElem& y : nset) d.insert(coset_rep(g.neg(y)));
    q.b0.assign(b0.begin(), b0.end());
    q.d.assign(d.begin(), d.end());
    std::set<GElem> sums;
    std::size_t count = 0;
    for (const GElem& x : b0) {
      for (const GElem& y : d) {
        sums.insert(coset_rep(g.add(x, y)));
        ++count;
      }
    }
    std::size_t quotient_order = static_cast<std::size_t>(g.order() / h.size());
    q.covers_punctured_quotient =
        sums.size() == count && sums.size() == quotient_order - 1 &&
        !sums.count(coset_rep(g.zero()));
    report.quotient = std::move(q);
  }
  return report;
}

std::vector<Subgroup> all_subgroups(const GroupSpec& g) {
  // BFS over generated subgroups, keyed by their element lists.
  std::set<std::vector<GElem>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<GElem>> frontier;

  Subgroup triv = Subgroup::trivial(g);
  seen.insert(triv.elements());
  out.push_back(triv);
  frontier.push_back(triv.elements());

  std::vector<GElem> elems = g.all_elements();
  while (!frontier.empty()) {
    std::vector<std::vector<GElem>> next;
    for (const auto& base : frontier) {
      std::set<GElem> base_set(base.begin(), base.end());
      for (const GElem& x : elems) {
        if (base_set.count(x)) continue;
        std::vector<GElem> gens = base;
        gens.push_back(x);
        std::vector<GElem> closure = Subgroup::generated_by(g, gens).elements();
        if (seen.insert(closure).second) {
          out.push_back(Subgroup::from_elements(g, closure));
          next.push_back(std::move(closure));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace abelian

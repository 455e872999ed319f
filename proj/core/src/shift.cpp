#include "abelian/shift.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <unordered_map>

namespace abelian {

namespace {

std::vector<std::int64_t> scan_order(std::int64_t n, std::uint64_t seed) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  return perm;
}

// index-level addition table for a group
struct AddTable {
  std::int64_t n;
  std::vector<std::int64_t> add;  // n*n
  std::vector<std::int64_t> neg;  // n

  explicit AddTable(const GroupSpec& g) : n(g.order()) {
    std::vector<GElem> elems = g.all_elements();
    add.resize(static_cast<std::size_t>(n * n));
    neg.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      neg[static_cast<std::size_t>(i)] = g.index(g.neg(elems[static_cast<std::size_t>(i)]));
      for (std::int64_t j = 0; j < n; ++j) {
        add[static_cast<std::size_t>(i * n + j)] =
            g.index(g.add(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
      }
    }
  }
  std::int64_t operator()(std::int64_t a, std::int64_t b) const {
    return add[static_cast<std::size_t>(a * n + b)];
  }
};

}  // namespace

// ---------- CertificateBuilder ----------

CertificateBuilder::CertificateBuilder(CharSet zero_set)
    : group_(zero_set.group()), zero_set_(std::move(zero_set)) {
  if (zero_set_.is_full()) {
    throw domain_error("certificate: zero set is the whole dual group");
  }
}

void CertificateBuilder::shift(const GElem& delta) {
  group_.require_member(delta, "shift");
  for (ShiftStep& step : steps_) {
    step.alpha = group_.add(step.alpha, delta);
    step.psi = group_.sub(step.psi, delta);
  }
}

bool CertificateBuilder::inside_zeros() const {
  return std::all_of(steps_.begin(), steps_.end(),
                     [&](const ShiftStep& s) { return zero_set_.contains(s.alpha); });
}

void CertificateBuilder::extend(const GElem& eta) {
  group_.require_member(eta, "extend");
  if (!inside_zeros()) {
    throw domain_error("extend: current set is not inside the zero set");
  }
  if (zero_set_.contains(eta)) {
    throw domain_error("extend: element is not a nonzero");
  }
  steps_.push_back(ShiftStep{group_.zero(), eta});
}

std::vector<GElem> CertificateBuilder::elements() const {
  std::vector<GElem> out;
  out.reserve(steps_.size());
  for (const ShiftStep& s : steps_) out.push_back(s.alpha);
  return out;
}

ShiftCertificate CertificateBuilder::certificate() const {
  return ShiftCertificate{group_, zero_set_, steps_};
}

IndependentSet CertificateBuilder::build() const { return IndependentSet{elements(), certificate()}; }

// ---------- verification ----------

VerifyResult verify_certificate(const ShiftCertificate& cert) {
  if (!(cert.zero_set.group() == cert.group)) {
    throw domain_error("certificate: zero set is over a different group");
  }
  for (const ShiftStep& s : cert.steps) {
    cert.group.require_member(s.psi, "certificate step");
    cert.group.require_member(s.alpha, "certificate step");
  }
  VerifyResult result;
  if (cert.zero_set.is_full()) {
    result.reason = "zero set is the whole dual group; no nonzero function exists";
    return result;
  }
  const std::int64_t t = static_cast<std::int64_t>(cert.steps.size());
  std::set<GElem> seen;
  for (std::int64_t i = 0; i < t; ++i) {
    const ShiftStep& step = cert.steps[static_cast<std::size_t>(i)];
    if (!seen.insert(step.alpha).second) {
      result.failing_step = i + 1;
      result.reason = "duplicate alpha " + step.alpha.to_string();
      return result;
    }
    GElem hit = cert.group.add(step.psi, step.alpha);
    if (cert.zero_set.contains(hit)) {
      result.failing_step = i + 1;
      result.reason = "psi + alpha = " + hit.to_string() + " is a zero";
      return result;
    }
    for (std::int64_t j = 0; j < i; ++j) {
      GElem moved = cert.group.add(step.psi, cert.steps[static_cast<std::size_t>(j)].alpha);
      if (!cert.zero_set.contains(moved)) {
        result.failing_step = i + 1;
        result.reason = "psi + alpha_" + std::to_string(j + 1) + " = " + moved.to_string() +
                        " is not a zero";
        return result;
      }
    }
  }
  result.accepted = true;
  result.size = t;
  return result;
}

// ---------- greedy construction ----------

IndependentSet greedy_delta(const CharSet& zeros, std::uint64_t seed) {
  const GroupSpec& g = zeros.group();
  if (zeros.is_full()) throw domain_error("greedy_delta: zero set is the whole dual group");
  const std::int64_t n = g.order();
  AddTable add(g);
  const std::vector<char>& zmask = zeros.mask();
  std::vector<std::int64_t> perm = scan_order(n, seed);

  std::int64_t eta = -1;
  for (std::int64_t cand : perm) {
    if (!zmask[static_cast<std::size_t>(cand)]) {
      eta = cand;
      break;
    }
  }

  CertificateBuilder builder(zeros);
  std::vector<std::int64_t> current;  // indices of the current set
  while (true) {
    std::int64_t sigma = -1;
    for (std::int64_t cand : perm) {
      bool ok = true;
      for (std::int64_t a : current) {
        if (!zmask[static_cast<std::size_t>(add(cand, a))]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        sigma = cand;
        break;
      }
    }
    if (sigma < 0) break;
    builder.shift(g.element(sigma));
    for (std::int64_t& a : current) a = add(sigma, a);
    builder.extend(g.element(eta));
    current.push_back(eta);
  }

  IndependentSet result = builder.build();
  VerifyResult check = verify_certificate(result.certificate);
  if (!check.accepted) throw internal_error("greedy_delta produced an invalid certificate");
  return result;
}

// ---------- exact search ----------

namespace {

struct ExactSearch {
  std::int64_t n;
  const AddTable& add;
  std::uint64_t zmask = 0;
  std::vector<std::int64_t> nonzeros;

  struct Entry {
    std::int64_t best = 0;
    std::int64_t sigma = -1;
    std::int64_t eta = -1;
  };
  std::unordered_map<std::uint64_t, Entry> memo;

  ExactSearch(std::int64_t n_, const AddTable& add_) : n(n_), add(add_) {}

  std::uint64_t translate(std::uint64_t mask, std::int64_t delta) const {
    std::uint64_t out = 0;
    while (mask) {
      int i = std::countr_zero(mask);
      mask &= mask - 1;
      out |= std::uint64_t{1} << add(delta, i);
    }
    return out;
  }

  std::uint64_t canonical(std::uint64_t mask, std::int64_t* offset = nullptr) const {
    std::uint64_t best = translate(mask, 0);
    std::int64_t best_delta = 0;
    for (std::int64_t delta = 1; delta < n; ++delta) {
      std::uint64_t t = translate(mask, delta);
      if (t < best) {
        best = t;
        best_delta = delta;
      }
    }
    if (offset) *offset = best_delta;
    return best;
  }

  const Entry& solve(std::uint64_t canon) {
    auto it = memo.find(canon);
    if (it != memo.end()) return it->second;
    Entry entry;
    entry.best = std::popcount(canon);
    // Avoid re-solving identical children produced by different shifts.
    std::set<std::uint64_t> tried;
    for (std::int64_t sigma = 0; sigma < n; ++sigma) {
      std::uint64_t shifted = translate(canon, sigma);
      if ((shifted & ~zmask) != 0) continue;
      for (std::int64_t eta : nonzeros) {
        std::uint64_t child = shifted | (std::uint64_t{1} << eta);
        std::uint64_t child_canon = canonical(child);
        if (!tried.insert(child_canon).second) continue;
        std::int64_t value = solve(child_canon).best;
        if (value > entry.best) {
          entry.best = value;
          entry.sigma = sigma;
          entry.eta = eta;
        }
      }
    }
    return memo.emplace(canon, entry).first->second;
  }
};

}  // namespace

ExactDeltaResult exact_delta(const CharSet& zeros, std::int64_t cap) {
  const GroupSpec& g = zeros.group();
  if (zeros.is_full()) throw domain_error("exact_delta: zero set is the whole dual group");
  const std::int64_t n = g.order();
  if (n > cap) {
    throw resource_error("exact_delta: dual order " + std::to_string(n) + " exceeds the cap " +
                         std::to_string(cap) + "; use greedy_delta instead");
  }
  if (n > 60) throw resource_error("exact_delta: dual order too large for the search mask");

  AddTable add(g);
  ExactSearch search(n, add);
  for (std::int64_t i = 0; i < n; ++i) {
    if (zeros.mask()[static_cast<std::size_t>(i)]) search.zmask |= std::uint64_t{1} << i;
  }
  for (std::int64_t i = 0; i < n; ++i) {
    if (!zeros.mask()[static_cast<std::size_t>(i)]) search.nonzeros.push_back(i);
  }

  std::int64_t best = search.solve(0).best;

  // Reconstruct a witness by walking stored moves; stored moves apply to the
  // canonical representative, so compose with the current offset.
  CertificateBuilder builder(zeros);
  std::uint64_t actual = 0;
  while (true) {
    std::int64_t offset = 0;
    std::uint64_t canon = search.canonical(actual, &offset);
    const auto& entry = search.memo.at(canon);
    if (entry.sigma < 0) break;
    std::int64_t sigma_rel = add(entry.sigma, offset);
    builder.shift(g.element(sigma_rel));
    builder.extend(g.element(entry.eta));
    actual = search.translate(actual, sigma_rel) | (std::uint64_t{1} << entry.eta);
  }
  IndependentSet witness = builder.build();
  if (static_cast<std::int64_t>(witness.elements.size()) != best) {
    throw internal_error("exact_delta: witness size disagrees with the search value");
  }
  VerifyResult check = verify_certificate(witness.certificate);
  if (!check.accepted) throw internal_error("exact_delta produced an invalid certificate");
  return ExactDeltaResult{best, std::move(witness)};
}

// ---------- S-rank view ----------

bool sequence_has_full_s_rank(const GroupSpec& group, const std::vector<GElem>& xs,
                              const std::vector<GElem>& s) {
  if (xs.empty()) throw domain_error("s_rank: sequence is empty");
  if (s.empty()) throw domain_error("s_rank: S is empty");
  std::vector<char> covered(static_cast<std::size_t>(group.order()), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    group.require_member(xs[i], "s_rank");
    bool escapes = false;
    std::vector<std::int64_t> translate_idx;
    translate_idx.reserve(s.size());
    for (const GElem& y : s) {
      std::int64_t idx = group.index(group.add(xs[i], y));
      translate_idx.push_back(idx);
      if (!covered[static_cast<std::size_t>(idx)]) escapes = true;
    }
    if (i > 0 && !escapes) return false;
    for (std::int64_t idx : translate_idx) covered[static_cast<std::size_t>(idx)] = 1;
  }
  return true;
}

std::vector<GElem> srank_sequence_from_certificate(const ShiftCertificate& cert) {
  std::vector<GElem> out;
  out.reserve(cert.steps.size());
  for (const ShiftStep& s : cert.steps) out.push_back(cert.group.neg(s.alpha));
  return out;
}

std::optional<ShiftCertificate> certificate_from_srank_sequence(const GroupSpec& group,
                                                                const std::vector<GElem>& xs,
                                                                const std::vector<GElem>& s) {
  if (xs.empty()) throw domain_error("s_rank: sequence is empty");
  if (s.empty()) throw domain_error("s_rank: S is empty");
  std::vector<GElem> zero_elems;
  {
    std::vector<char> in_s(static_cast<std::size_t>(group.order()), 0);
    for (const GElem& y : s) {
      group.require_member(y, "s_rank");
      in_s[static_cast<std::size_t>(group.index(y))] = 1;
    }
    for (std::int64_t i = 0; i < group.order(); ++i) {
      if (!in_s[static_cast<std::size_t>(i)]) zero_elems.push_back(group.element(i));
    }
  }
  CharSet zeros(group, std::move(zero_elems));

  std::vector<char> covered(static_cast<std::size_t>(group.order()), 0);
  std::vector<ShiftStep> steps;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    group.require_member(xs[i], "s_rank");
    // enumeration-minimal w in (x_i + S) \ union of earlier translates
    std::int64_t w = -1;
    std::set<std::int64_t> translate_idx;
    for (const GElem& y : s) translate_idx.insert(group.index(group.add(xs[i], y)));
    for (std::int64_t idx : translate_idx) {
      if (!covered[static_cast<std::size_t>(idx)]) {
        w = idx;
        break;
      }
    }
    if (i > 0 && w < 0) return std::nullopt;
    if (w < 0) w = *translate_idx.begin();  // first step: any element of x_1 + S
    for (std::int64_t idx : translate_idx) covered[static_cast<std::size_t>(idx)] = 1;
    steps.push_back(ShiftStep{group.element(w), group.neg(xs[i])});
  }
  ShiftCertificate cert{group, zeros, std::move(steps)};
  if (!verify_certificate(cert).accepted) {
    throw internal_error("s_rank conversion produced an invalid certificate");
  }
  return cert;
}

ShiftCertificate map_certificate(const ShiftCertificate& cert, std::int64_t multiplier) {
  ShiftCertificate out = cert;
  for (ShiftStep& s : out.steps) {
    s.psi = cert.group.smul(multiplier, s.psi);
    s.alpha = cert.group.smul(multiplier, s.alpha);
  }
  return out;
}

// ---------- rank oracle ----------

bool matrix_rank_check(const GroupSpec& group, const std::vector<GElem>& a,
                       const std::vector<GElem>& s, const FieldCtx& field) {
  if (a.empty() || s.empty()) throw domain_error("matrix_rank_check: empty input set");
  if (a.size() > s.size()) return false;
  std::vector<std::vector<FieldScalar>> rows;
  rows.reserve(a.size());
  for (const GElem& chi : a) {
    std::vector<FieldScalar> row;
    row.reserve(s.size());
    for (const GElem& x : s) {
      row.push_back(character_eval(group, chi, group.neg(x), field));
    }
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over E
  std::size_t rank = 0;
  const std::size_t ncols = s.size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    FieldScalar inv = rows[rank][col].inv();
    for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      FieldScalar c = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) {
        rows[r][j] = rows[r][j] - c * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank == rows.size();
}

// ---------- code-level bound ----------

namespace {

struct DeltaEval {
  std::int64_t value = 0;
  bool certified = false;
};

DeltaEval evaluate_delta(const CharSet& zprime, const ShiftBoundBudget& budget) {
  if (zprime.group().order() <= budget.exact_cap) {
    return DeltaEval{exact_delta(zprime, budget.exact_cap).delta, true};
  }
  return DeltaEval{static_cast<std::int64_t>(greedy_delta(zprime, budget.seed).elements.size()),
                   false};
}

}  // namespace

CodeShiftBound code_shift_bound(const CharSet& zeros, const FieldCtx& field,
                                const ShiftBoundBudget& budget) {
  const GroupSpec& g = zeros.group();
  CharSet closure = f_closure(zeros, field);
  CodeShiftBound result;
  if (closure.is_full()) {
    result.degenerate = true;
    result.certified = true;
    return result;
  }

  std::vector<std::vector<GElem>> orbits = conjugation_orbits(closure.complement(), field);
  const std::int64_t k = static_cast<std::int64_t>(orbits.size());

  auto candidate = [&](std::uint64_t orbit_mask) {
    std::vector<GElem> elems = closure.elements();
    for (std::int64_t i = 0; i < k; ++i) {
      if (orbit_mask & (std::uint64_t{1} << i)) {
        const auto& orbit = orbits[static_cast<std::size_t>(i)];
        elems.insert(elems.end(), orbit.begin(), orbit.end());
      }
    }
    return CharSet(g, std::move(elems));
  };

  bool have = false;
  bool all_exact = true;
  auto consider = [&](std::uint64_t orbit_mask) {
    CharSet zprime = candidate(orbit_mask);
    DeltaEval eval = evaluate_delta(zprime, budget);
    all_exact = all_exact && eval.certified;
    if (!have || eval.value < result.bound) {
      have = true;
      result.bound = eval.value;
      result.minimizing_zero_set = std::move(zprime);
    }
  };

  if (k <= budget.orbit_enumeration_cap) {
    const std::uint64_t full = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    for (std::uint64_t mask = 0; mask < full; ++mask) consider(mask);
    // note: mask == full (all orbits included) is the non-proper superset
  } else {
    // Branch and bound over orbit inclusion. The counting bound
    // delta >= ceil(n / |N'|) prunes subtrees that cannot beat the incumbent;
    // it is a theorem, so pruning never costs exactness.
    const std::int64_t n = g.order();
    std::vector<std::int64_t> orbit_sizes;
    orbit_sizes.reserve(orbits.size());
    for (const auto& o : orbits) orbit_sizes.push_back(static_cast<std::int64_t>(o.size()));
    std::vector<std::int64_t> suffix(orbits.size() + 1, 0);
    for (std::size_t i = orbits.size(); i-- > 0;) suffix[i] = suffix[i + 1] + orbit_sizes[i];

    auto dfs = [&](auto&& self, std::int64_t idx, std::uint64_t mask,
                   std::int64_t excluded_size) -> void {
      if (have) {
        std::int64_t max_nonzeros = excluded_size + suffix[static_cast<std::size_t>(idx)];
        if (max_nonzeros > 0) {
          std::int64_t optimistic = (n + max_nonzeros - 1) / max_nonzeros;
          if (optimistic >= result.bound) return;
        }
      }
      if (idx == k) {
        if (excluded_size == 0) return;  // all orbits included: not proper
        consider(mask);
        return;
      }
      // exclude first: larger N' gives the smaller counting bound first
      self(self, idx + 1, mask, excluded_size + orbit_sizes[static_cast<std::size_t>(idx)]);
      self(self, idx + 1, mask | (std::uint64_t{1} << idx), excluded_size);
    };
    dfs(dfs, 0, 0, 0);
  }

  result.certified = all_exact;
  return result;
}

CodeShiftBound bch_bound(const CharSet& zeros, const BchChain& chain, const FieldCtx& field,
                         const ShiftBoundBudget& budget) {
  const GroupSpec& g = zeros.group();
  g.require_member(chain.chi, "bch_bound");
  if (chain.designed_distance < 2) {
    throw precondition_error("bch_bound: designed distance must be at least 2");
  }
  for (std::int64_t i = chain.start; i <= chain.start + chain.designed_distance - 2; ++i) {
    if (!zeros.contains(g.smul(i, chain.chi))) {
      throw precondition_error("bch_bound: chi^" + std::to_string(i) +
                               " is not among the defining zeros");
    }
  }
  Subgroup powers = Subgroup::generated_by(g, {chain.chi});
  CharSet augmented = zeros.union_with(CharSet(g, powers.elements()));
  CodeShiftBound inner = code_shift_bound(augmented, field, budget);
  CodeShiftBound result;
  if (inner.degenerate) {
    result.bound = chain.designed_distance;
    result.certified = true;
    return result;
  }
  if (inner.bound < chain.designed_distance) {
    result.bound = inner.bound;
    result.certified = inner.certified;
    result.minimizing_zero_set = inner.minimizing_zero_set;
  } else {
    result.bound = chain.designed_distance;
    result.certified = inner.certified;
  }
  return result;
}

}  // namespace abelian

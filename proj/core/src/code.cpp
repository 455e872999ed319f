#include "abelian/code.hpp"

#include <algorithm>

namespace abelian {

namespace {

void require_compatible(const GroupSpec& group, const FieldCtx& field, const char* where) {
  if (field.root_order() != group.exponent()) {
    throw domain_error(std::string(where) + ": field root order does not equal the group exponent");
  }
}

}  // namespace

AbelianCode::AbelianCode(GroupSpec group, FieldCtx field, CharSet defining_zeros,
                         CharSet complete_zeros, std::vector<GAlgElem> basis)
    : group_(std::move(group)),
      field_(std::move(field)),
      defining_zeros_(std::move(defining_zeros)),
      complete_zeros_(std::move(complete_zeros)),
      basis_(std::move(basis)) {}

AbelianCode code_from_zeros(const GroupSpec& group, const FieldCtx& field, const CharSet& zeros) {
  require_compatible(group, field, "code_from_zeros");
  if (!(zeros.group() == group)) throw domain_error("code_from_zeros: zeros over a different group");
  CharSet complete = f_closure(zeros, field);

  const std::int64_t n = group.order();
  const std::int64_t m = field.extension_degree();
  std::vector<GElem> elems = group.all_elements();

  // Constraint rows over the base field: each zero character contributes m
  // rows, the coordinates of chi(-x) in the power basis of E over F.
  std::vector<std::vector<FieldScalar>> rows;
  rows.reserve(static_cast<std::size_t>(complete.size() * m));
  for (const GElem& chi : complete.elements()) {
    std::vector<std::vector<FieldScalar>> expanded(
        static_cast<std::size_t>(m),
        std::vector<FieldScalar>(static_cast<std::size_t>(n), field.zero()));
    for (std::int64_t x = 0; x < n; ++x) {
      FieldScalar v = character_eval(group, chi, group.neg(elems[static_cast<std::size_t>(x)]), field);
      std::vector<FieldScalar> coords = field.base_coords(v);
      for (std::int64_t i = 0; i < m; ++i) {
        expanded[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] =
            std::move(coords[static_cast<std::size_t>(i)]);
      }
    }
    for (auto& row : expanded) rows.push_back(std::move(row));
  }

  // Reduced row echelon form over the base field.
  std::vector<std::int64_t> pivot_cols;
  std::size_t rank = 0;
  for (std::int64_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    FieldScalar piv_inv = rows[rank][static_cast<std::size_t>(col)].inv();
    for (std::int64_t j = col; j < n; ++j) {
      rows[rank][static_cast<std::size_t>(j)] = rows[rank][static_cast<std::size_t>(j)] * piv_inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const FieldScalar& c = rows[r][static_cast<std::size_t>(col)];
      if (c.is_zero()) continue;
      FieldScalar factor = c;
      for (std::int64_t j = col; j < n; ++j) {
        rows[r][static_cast<std::size_t>(j)] =
            rows[r][static_cast<std::size_t>(j)] - factor * rows[rank][static_cast<std::size_t>(j)];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  // Kernel basis from the free columns; reduced echelon makes it canonical.
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (std::int64_t c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<GAlgElem> basis;
  for (std::int64_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<FieldScalar> vec(static_cast<std::size_t>(n), field.zero());
    vec[static_cast<std::size_t>(free_col)] = field.one();
    for (std::size_t r = 0; r < rank; ++r) {
      const FieldScalar& coeff = rows[r][static_cast<std::size_t>(free_col)];
      if (coeff.is_zero()) continue;
      vec[static_cast<std::size_t>(pivot_cols[r])] = -coeff;
    }
    basis.push_back(GAlgElem(group, field, std::move(vec)));
  }

  if (static_cast<std::int64_t>(basis.size()) != n - complete.size()) {
    throw internal_error("code dimension disagrees with the zero-set count");
  }
  return AbelianCode(group, field, zeros, std::move(complete), std::move(basis));
}

namespace {

// digits of the base-q reflected Gray code of c
void gray_digits(std::uint64_t c, std::int64_t q, std::int64_t k, std::vector<std::int64_t>& out) {
  out.assign(static_cast<std::size_t>(k) + 1, 0);
  for (std::int64_t i = 0; i < k; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(q));
    c /= static_cast<std::uint64_t>(q);
  }
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t g = out[static_cast<std::size_t>(i)] - out[static_cast<std::size_t>(i) + 1];
    out[static_cast<std::size_t>(i)] = ((g % q) + q) % q;
  }
  out.pop_back();
}

}  // namespace

std::int64_t min_weight_brute(const AbelianCode& code, std::int64_t cap) {
  const FieldCtx& field = code.field();
  if (field.kind() != FieldCtx::Kind::finite) {
    throw domain_error("min_weight_brute: enumeration requires a finite base field");
  }
  const std::int64_t q = field.base_order();
  const std::int64_t k = code.dimension();
  if (k == 0) throw domain_error("min_weight_brute: the code is trivial");
  std::uint64_t count = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (count > static_cast<std::uint64_t>(cap) / static_cast<std::uint64_t>(q)) {
      throw resource_error("min_weight_brute: q^dimension exceeds the cap");
    }
    count *= static_cast<std::uint64_t>(q);
  }
  if (count > static_cast<std::uint64_t>(cap)) {
    throw resource_error("min_weight_brute: q^dimension exceeds the cap");
  }

  // Base-field index tables.
  std::vector<FieldScalar> elems = field.base_field_elements();
  std::vector<std::vector<std::uint8_t>> add_tab(static_cast<std::size_t>(q),
                                                 std::vector<std::uint8_t>(static_cast<std::size_t>(q)));
  std::vector<std::vector<std::uint8_t>> mul_tab = add_tab;
  std::vector<std::uint8_t> neg_tab(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    neg_tab[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(field.base_field_index(-elems[static_cast<std::size_t>(i)]));
    for (std::int64_t j = 0; j < q; ++j) {
      add_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
          field.base_field_index(elems[static_cast<std::size_t>(i)] + elems[static_cast<std::size_t>(j)]));
      mul_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
          field.base_field_index(elems[static_cast<std::size_t>(i)] * elems[static_cast<std::size_t>(j)]));
    }
  }

  // Basis rows as sparse (position, base-field index) lists.
  const std::int64_t n = code.length();
  std::vector<std::vector<std::pair<std::int32_t, std::uint8_t>>> sparse(
      static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) {
    for (std::int64_t pos = 0; pos < n; ++pos) {
      const FieldScalar& v = code.basis()[static_cast<std::size_t>(j)].value_at(pos);
      if (!v.is_zero()) {
        sparse[static_cast<std::size_t>(j)].push_back(
            {static_cast<std::int32_t>(pos), static_cast<std::uint8_t>(field.base_field_index(v))});
      }
    }
  }

  std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 0);
  std::int64_t weight = 0;
  std::int64_t best = n + 1;
  std::vector<std::int64_t> prev_digits, cur_digits;
  gray_digits(0, q, k, prev_digits);
  for (std::uint64_t c = 1; c < count; ++c) {
    gray_digits(c, q, k, cur_digits);
    std::int64_t j = -1, old_digit = 0, new_digit = 0;
    for (std::int64_t i = 0; i < k; ++i) {
      if (cur_digits[static_cast<std::size_t>(i)] != prev_digits[static_cast<std::size_t>(i)]) {
        j = i;
        old_digit = prev_digits[static_cast<std::size_t>(i)];
        new_digit = cur_digits[static_cast<std::size_t>(i)];
        break;
      }
    }
    std::swap(prev_digits, cur_digits);
    // digit values index base-field elements; the change contributes
    // (elem[new] - elem[old]) * basis row j
    std::uint8_t delta_idx =
        add_tab[static_cast<std::size_t>(new_digit)][neg_tab[static_cast<std::size_t>(old_digit)]];
    for (const auto& [pos, coeff] : sparse[static_cast<std::size_t>(j)]) {
      std::uint8_t contribution = mul_tab[delta_idx][coeff];
      std::uint8_t old_val = word[static_cast<std::size_t>(pos)];
      std::uint8_t new_val = add_tab[old_val][contribution];
      word[static_cast<std::size_t>(pos)] = new_val;
      weight += (new_val != 0) - (old_val != 0);
    }
    if (weight < best) best = weight;
  }
  if (best > n) throw internal_error("min_weight_brute: no codeword visited");
  return best;
}

bool codeword_membership(const GAlgElem& f, const AbelianCode& code) {
  if (!(f.group() == code.group()) || !(f.field() == code.field())) {
    throw domain_error("codeword_membership: mismatched group or field");
  }
  if (!f.base_field_valued()) {
    throw domain_error("codeword_membership: function is not base-field-valued");
  }
  const GroupSpec& g = code.group();
  const FieldCtx& field = code.field();
  std::vector<GElem> elems = g.all_elements();
  for (const GElem& chi : code.complete_zeros().elements()) {
    FieldScalar acc = field.zero();
    for (std::int64_t x = 0; x < g.order(); ++x) {
      const FieldScalar& fx = f.value_at(x);
      if (fx.is_zero()) continue;
      acc = acc + fx * character_eval(g, chi, g.neg(elems[static_cast<std::size_t>(x)]), field);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace abelian

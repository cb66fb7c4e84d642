#include "rghw/linalg.hpp"

#include <algorithm>

#include "rghw/error.hpp"

namespace rghw {

Vector EchelonBasis::reduce(std::span<const FieldElement> v) const {
  if (v.size() != length_) fail(ErrorCode::LengthMismatch, "vector length does not match the ambient space");
  Vector out(v.begin(), v.end());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const FieldElement c = out[pivots_[j]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[j];
    for (std::size_t t = 0; t < length_; ++t) {
      if (!row[t].is_zero()) out[t] = field_.sub(out[t], field_.mul(c, row[t]));
    }
  }
  return out;
}

bool EchelonBasis::contains(std::span<const FieldElement> v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](FieldElement x) { return x.is_zero(); });
}

bool EchelonBasis::insert(std::span<const FieldElement> v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](FieldElement x) { return !x.is_zero(); });
  if (it == r.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - r.begin());
  const FieldElement scale = field_.inv(r[pivot]);
  for (auto& x : r) x = field_.mul(x, scale);
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank_of(const Field& field, std::span<const Vector> rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(field, rows.front().size());
  for (const auto& row : rows) basis.insert(row);
  return basis.dimension();
}

RowEchelon reduced_row_echelon(const Field& field, std::span<const Vector> rows) {
  RowEchelon out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  std::vector<Vector> a(rows.begin(), rows.end());
  for (const auto& row : a) {
    if (row.size() != n) fail(ErrorCode::LengthMismatch, "ragged matrix");
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < a.size(); ++col) {
    std::size_t sel = lead;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[lead]);
    const FieldElement scale = field.inv(a[lead][col]);
    for (auto& x : a[lead]) x = field.mul(x, scale);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == lead || a[i][col].is_zero()) continue;
      const FieldElement c = a[i][col];
      for (std::size_t t = 0; t < n; ++t) a[i][t] = field.sub(a[i][t], field.mul(c, a[lead][t]));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  a.resize(lead);
  out.rows = std::move(a);
  return out;
}

}  // namespace rghw

#include "rghw/weights.hpp"

#include "rghw/error.hpp"

namespace rghw {

void WeightQuery::validate() const {
  validate_band(shape, band);
  const std::uint64_t ell = band_size(shape, band);
  if (r < 1 || r > ell) {
    fail(ErrorCode::RankOutOfRange, "r = " + std::to_string(r) + " outside 1.." + std::to_string(ell));
  }
}

WeightRecord relative_weight(const WeightQuery& query) {
  query.validate();
  const BoxShape& shape = query.shape;
  WeightRecord rec;
  rec.r = query.r;
  rec.a_r = nth_band_element(shape, query.band, query.r);
  rec.s = lex_rank_in_leq(shape, query.band.u1, rec.a_r);
  // s >= r: the r band elements up to a_r all precede or equal it in F_{<=u1}.
  rec.max_zeros = shape.encode(rec.a_r) + (rec.s - rec.r);
  rec.M_r = shape.n() - rec.max_zeros;
  return rec;
}

std::uint64_t max_zeros(const WeightQuery& query) { return relative_weight(query).max_zeros; }

WeightReport hierarchy(const BoxShape& shape, const DegreeBand& band) {
  validate_band(shape, band);
  WeightReport report;
  report.shape = shape;
  report.band = band;
  report.ell = band_size(shape, band);
  report.records.reserve(report.ell);
  for (std::uint64_t r = 1; r <= report.ell; ++r) report.records.push_back(relative_weight({shape, band, r}));
  return report;
}

std::vector<std::uint64_t> WeightReport::monotonicity_violations() const {
  std::vector<std::uint64_t> bad;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].M_r <= records[i - 1].M_r) bad.push_back(records[i].r);
  }
  return bad;
}

}  // namespace rghw

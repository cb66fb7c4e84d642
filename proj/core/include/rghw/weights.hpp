#pragma once

#include <cstdint>
#include <vector>

#include "rghw/boxcomb.hpp"

namespace rghw {

/// One RGHW M_r(u1, u2) of AC(u1, A) relative to AC(u2, A), where u2 = -1
/// means the zero code and the value is the r-th generalized Hamming weight.
struct WeightQuery {
  BoxShape shape;
  DegreeBand band;
  std::uint64_t r = 1;

  /// Throws Error{InvalidBand} or Error{RankOutOfRange}.
  void validate() const;
};

/// Closed-form value with its two witnesses: a_r is the r-th element of the
/// band in descending lex, s its position in F_{<=u1}. Then
///   M_r = n - code(a_r) - s + r,   max_zeros = n - M_r,
/// where code(a) = sum_i a_i prod_{j>i} d_j.
struct WeightRecord {
  std::uint64_t r = 0;
  BoxPoint a_r;
  std::uint64_t s = 0;
  std::uint64_t M_r = 0;
  std::uint64_t max_zeros = 0;
};

struct WeightReport {
  BoxShape shape;
  DegreeBand band;
  std::uint64_t ell = 0;
  std::vector<WeightRecord> records;

  /// Indices r (1-based) where M_r <= M_{r-1}; empty when strictly increasing.
  std::vector<std::uint64_t> monotonicity_violations() const;
};

WeightRecord relative_weight(const WeightQuery& query);
std::uint64_t max_zeros(const WeightQuery& query);

/// Records for r = 1..ell. Throws Error{InvalidBand}.
WeightReport hierarchy(const BoxShape& shape, const DegreeBand& band);

}  // namespace rghw

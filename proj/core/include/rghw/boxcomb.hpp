#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rghw {

/// An element a = (a_1, ..., a_m) of the box F. Doubles as an exponent
/// vector of a reduced monomial and as the index of a grid point.
struct BoxPoint {
  std::vector<int> coords;

  BoxPoint() = default;
  explicit BoxPoint(std::vector<int> c) : coords(std::move(c)) {}
  BoxPoint(std::initializer_list<int> c) : coords(c) {}

  std::size_t size() const noexcept { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int degree() const noexcept;

  friend bool operator==(const BoxPoint&, const BoxPoint&) = default;
};

std::string to_string(const BoxPoint& a);

/// Sorted ascending vector of mixed-radix encodings. Ascending encoding is
/// ascending lex order, so descending-lex listings are the reverse.
using PointSet = std::vector<std::uint64_t>;

/// The box F = {0..d_1-1} x ... x {0..d_m-1}.
///
/// Sizes are normalized to ascending order at construction; permutation()[i]
/// is the index in the caller's list that became coordinate i. Points are
/// encoded as sum_i a_i * prod_{j>i} d_j (last coordinate fastest).
class BoxShape {
 public:
  BoxShape() = default;
  /// Throws Error{InvalidShape} for an empty list, a zero size, or n >= 2^63.
  explicit BoxShape(std::vector<int> sizes);

  std::size_t m() const noexcept { return dims_.size(); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(std::size_t i) const { return dims_[i]; }
  std::uint64_t n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  bool was_permuted() const noexcept;

  /// prod_{j>i} d_j.
  std::uint64_t place_value(std::size_t i) const { return place_[i]; }

  bool contains(const BoxPoint& a) const noexcept;
  std::uint64_t encode(const BoxPoint& a) const;
  BoxPoint decode(std::uint64_t code) const;
  int degree_of(std::uint64_t code) const;

  /// Number of completions (a_i, ..., a_m) of a prefix whose coordinate sum
  /// lies in [lo, hi]. i == m counts the empty completion.
  std::uint64_t completions(std::size_t i, long lo, long hi) const;

  friend bool operator==(const BoxShape& a, const BoxShape& b) noexcept {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> perm_;
  std::vector<std::uint64_t> place_;
  std::uint64_t n_ = 0;
  int k_ = 0;
  // cum_[i][s] = #{(a_i..a_m) : sum <= s}, shared between copies.
  std::shared_ptr<const std::vector<std::vector<std::uint64_t>>> cum_;
};

std::string to_string(const BoxShape& shape);

/// F_{u2}^{u1} = {a : u2 < deg(a) <= u1}.
struct DegreeBand {
  int u2 = -1;
  int u1 = 0;

  DegreeBand() = default;
  /// Throws Error{InvalidBand} unless -1 <= u2 < u1.
  DegreeBand(int lower, int upper);

  bool contains_degree(int deg) const noexcept { return u2 < deg && deg <= u1; }
  friend bool operator==(const DegreeBand&, const DegreeBand&) = default;
};

/// Throws Error{InvalidBand} when u1 > k.
void validate_band(const BoxShape& shape, const DegreeBand& band);

enum class PartialOrdering { less, equal, greater, incomparable };

/// Throws Error{ShapeMismatch} when lengths differ.
std::strong_ordering cmp_lex(const BoxPoint& a, const BoxPoint& b);
PartialOrdering cmp_partial(const BoxPoint& a, const BoxPoint& b);
/// a <=_P b.
bool dominated_by(const BoxPoint& a, const BoxPoint& b);

std::uint64_t band_size(const BoxShape& shape, const DegreeBand& band);
std::uint64_t slice_size(const BoxShape& shape, int u);

/// All of F_{u2}^{u1}, descending lex.
std::vector<BoxPoint> enumerate_band(const BoxShape& shape, const DegreeBand& band);
/// Same set as encodings, in descending lex (descending code) order.
std::vector<std::uint64_t> enumerate_band_codes(const BoxShape& shape, const DegreeBand& band);

/// The r-th (1-based) element of the band in descending lex, by unranking.
/// Throws Error{RankOutOfRange}.
BoxPoint nth_band_element(const BoxShape& shape, const DegreeBand& band, std::uint64_t r);

/// Inverse of nth_band_element. Throws Error{DegreeOutOfRange} if deg(a) is
/// outside the band.
std::uint64_t band_rank(const BoxShape& shape, const DegreeBand& band, const BoxPoint& a);

/// Position of a in F_{<=u1} sorted descending lex. Throws Error{DegreeTooHigh}.
std::uint64_t lex_rank_in_leq(const BoxShape& shape, int u1, const BoxPoint& a);

/// Upward closure: every b with a <=_P b for some a in S.
PointSet shadow(const BoxShape& shape, std::span<const std::uint64_t> S);
/// F minus the shadow.
PointSet footprint(const BoxShape& shape, std::span<const std::uint64_t> S);
/// Shadow / footprint intersected with the slice F_u (empty when u is
/// outside [0, k]).
PointSet shadow_slice(const BoxShape& shape, std::span<const std::uint64_t> S, int u);
PointSet footprint_slice(const BoxShape& shape, std::span<const std::uint64_t> S, int u);

/// First `count` elements of F_u in descending lex. Throws Error{CountOutOfRange}.
PointSet lex_prefix_of_slice(const BoxShape& shape, int u, std::uint64_t count);

/// |shadow of the first r elements of F_{<=d}| = n - encode(a_r).
/// Throws Error{RankOutOfRange}.
std::uint64_t shadow_card_of_leq_prefix(const BoxShape& shape, int d, std::uint64_t r);

PointSet encode_all(const BoxShape& shape, std::span<const BoxPoint> points);
std::vector<BoxPoint> decode_all(const BoxShape& shape, std::span<const std::uint64_t> codes);

}  // namespace rghw

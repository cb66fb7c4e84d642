#include "rghw/boxcomb.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "rghw/error.hpp"

namespace rghw {

int BoxPoint::degree() const noexcept {
  return std::accumulate(coords.begin(), coords.end(), 0);
}

std::string to_string(const BoxPoint& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

std::string to_string(const BoxShape& shape) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape.m(); ++i) os << (i ? "," : "") << shape.dim(i);
  os << ")";
  return os.str();
}

BoxShape::BoxShape(std::vector<int> sizes) {
  if (sizes.empty()) fail(ErrorCode::InvalidShape, "a box needs at least one coordinate");
  for (int d : sizes) {
    if (d < 1) fail(ErrorCode::InvalidShape, "box sizes must be positive, got " + std::to_string(d));
  }
  perm_.resize(sizes.size());
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  std::stable_sort(perm_.begin(), perm_.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  dims_.reserve(sizes.size());
  for (std::size_t i : perm_) dims_.push_back(sizes[i]);

  const std::size_t m = dims_.size();
  place_.assign(m, 1);
  std::uint64_t n = 1;
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  for (std::size_t i = m; i-- > 0;) {
    place_[i] = n;
    if (n > limit / static_cast<std::uint64_t>(dims_[i])) {
      fail(ErrorCode::InvalidShape, "box cardinality exceeds 2^63");
    }
    n *= static_cast<std::uint64_t>(dims_[i]);
  }
  n_ = n;
  k_ = 0;
  for (int d : dims_) k_ += d - 1;

  auto cum = std::make_shared<std::vector<std::vector<std::uint64_t>>>(
      m + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(k_) + 1, 0));
  std::vector<std::uint64_t> exact(static_cast<std::size_t>(k_) + 1, 0), next(exact.size(), 0);
  exact[0] = 1;
  std::partial_sum(exact.begin(), exact.end(), (*cum)[m].begin());
  for (std::size_t i = m; i-- > 0;) {
    // next[s] = sum_{v=0}^{d_i-1} exact[s-v], via the suffix-level cumulative row.
    const auto& below = (*cum)[i + 1];
    const long width = dims_[i];
    for (long s = 0; s <= k_; ++s) {
      const std::uint64_t hi = below[static_cast<std::size_t>(s)];
      const std::uint64_t lo = s - width >= 0 ? below[static_cast<std::size_t>(s - width)] : 0;
      next[static_cast<std::size_t>(s)] = hi - lo;
    }
    std::partial_sum(next.begin(), next.end(), (*cum)[i].begin());
  }
  cum_ = std::move(cum);
}

bool BoxShape::was_permuted() const noexcept {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return true;
  }
  return false;
}

bool BoxShape::contains(const BoxPoint& a) const noexcept {
  if (a.size() != m()) return false;
  for (std::size_t i = 0; i < m(); ++i) {
    if (a[i] < 0 || a[i] >= dims_[i]) return false;
  }
  return true;
}

std::uint64_t BoxShape::encode(const BoxPoint& a) const {
  if (a.size() != m()) fail(ErrorCode::ShapeMismatch, "point " + to_string(a) + " has wrong length");
  if (!contains(a)) {
    fail(ErrorCode::PointOutOfBox, "point " + to_string(a) + " is outside box " + to_string(*this));
  }
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < m(); ++i) code += static_cast<std::uint64_t>(a[i]) * place_[i];
  return code;
}

BoxPoint BoxShape::decode(std::uint64_t code) const {
  BoxPoint a;
  a.coords.resize(m());
  for (std::size_t i = m(); i-- > 0;) {
    a.coords[i] = static_cast<int>(code % static_cast<std::uint64_t>(dims_[i]));
    code /= static_cast<std::uint64_t>(dims_[i]);
  }
  return a;
}

int BoxShape::degree_of(std::uint64_t code) const {
  int deg = 0;
  for (std::size_t i = m(); i-- > 0;) {
    deg += static_cast<int>(code % static_cast<std::uint64_t>(dims_[i]));
    code /= static_cast<std::uint64_t>(dims_[i]);
  }
  return deg;
}

std::uint64_t BoxShape::completions(std::size_t i, long lo, long hi) const {
  lo = std::max(lo, 0L);
  hi = std::min(hi, static_cast<long>(k_));
  if (hi < lo) return 0;
  const auto& row = (*cum_)[i];
  return row[static_cast<std::size_t>(hi)] - (lo > 0 ? row[static_cast<std::size_t>(lo - 1)] : 0);
}

DegreeBand::DegreeBand(int lower, int upper) : u2(lower), u1(upper) {
  if (lower < -1) fail(ErrorCode::InvalidBand, "u2 = " + std::to_string(lower) + " < -1");
  if (lower >= upper) {
    fail(ErrorCode::InvalidBand,
         "u2 = " + std::to_string(lower) + " must be below u1 = " + std::to_string(upper));
  }
}

void validate_band(const BoxShape& shape, const DegreeBand& band) {
  if (band.u1 > shape.k()) {
    fail(ErrorCode::InvalidBand,
         "u1 = " + std::to_string(band.u1) + " exceeds k = " + std::to_string(shape.k()));
  }
  if (band.u2 < -1 || band.u2 >= band.u1) {
    fail(ErrorCode::InvalidBand, "band requires -1 <= u2 < u1");
  }
}

std::strong_ordering cmp_lex(const BoxPoint& a, const BoxPoint& b) {
  if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "lex comparison of points of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

PartialOrdering cmp_partial(const BoxPoint& a, const BoxPoint& b) {
  if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "partial comparison of points of different length");
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    le = le && a[i] <= b[i];
    ge = ge && a[i] >= b[i];
  }
  if (le && ge) return PartialOrdering::equal;
  if (le) return PartialOrdering::less;
  if (ge) return PartialOrdering::greater;
  return PartialOrdering::incomparable;
}

bool dominated_by(const BoxPoint& a, const BoxPoint& b) {
  const auto c = cmp_partial(a, b);
  return c == PartialOrdering::less || c == PartialOrdering::equal;
}

std::uint64_t band_size(const BoxShape& shape, const DegreeBand& band) {
  return shape.completions(0, band.u2 + 1L, band.u1);
}

std::uint64_t slice_size(const BoxShape& shape, int u) { return shape.completions(0, u, u); }

std::vector<std::uint64_t> enumerate_band_codes(const BoxShape& shape, const DegreeBand& band) {
  validate_band(shape, band);
  std::vector<std::uint64_t> out;
  out.reserve(band_size(shape, band));
  for (std::uint64_t c = shape.n(); c-- > 0;) {
    if (band.contains_degree(shape.degree_of(c))) out.push_back(c);
  }
  return out;
}

std::vector<BoxPoint> enumerate_band(const BoxShape& shape, const DegreeBand& band) {
  return decode_all(shape, enumerate_band_codes(shape, band));
}

BoxPoint nth_band_element(const BoxShape& shape, const DegreeBand& band, std::uint64_t r) {
  validate_band(shape, band);
  const std::uint64_t total = band_size(shape, band);
  if (r < 1 || r > total) {
    fail(ErrorCode::RankOutOfRange,
         "r = " + std::to_string(r) + " outside 1.." + std::to_string(total));
  }
  BoxPoint a;
  a.coords.resize(shape.m());
  long prefix = 0;
  for (std::size_t i = 0; i < shape.m(); ++i) {
    for (int v = shape.dim(i) - 1; v >= 0; --v) {
      const long used = prefix + v;
      const std::uint64_t c = shape.completions(i + 1, band.u2 + 1L - used, band.u1 - used);
      if (r <= c) {
        a.coords[i] = v;
        prefix = used;
        break;
      }
      r -= c;
    }
  }
  return a;
}

namespace {

// Number of x with deg(x) in [lo, hi] and x strictly lex-greater than a.
std::uint64_t count_lex_above(const BoxShape& shape, const BoxPoint& a, long lo, long hi) {
  std::uint64_t count = 0;
  long prefix = 0;
  for (std::size_t i = 0; i < shape.m(); ++i) {
    for (int v = a[i] + 1; v < shape.dim(i); ++v) {
      count += shape.completions(i + 1, lo - prefix - v, hi - prefix - v);
    }
    prefix += a[i];
  }
  return count;
}

}  // namespace

std::uint64_t band_rank(const BoxShape& shape, const DegreeBand& band, const BoxPoint& a) {
  validate_band(shape, band);
  if (!shape.contains(a)) fail(ErrorCode::PointOutOfBox, "point " + to_string(a) + " is outside the box");
  if (!band.contains_degree(a.degree())) {
    fail(ErrorCode::DegreeOutOfRange, "deg" + to_string(a) + " is outside the band");
  }
  return 1 + count_lex_above(shape, a, band.u2 + 1L, band.u1);
}

std::uint64_t lex_rank_in_leq(const BoxShape& shape, int u1, const BoxPoint& a) {
  if (!shape.contains(a)) fail(ErrorCode::PointOutOfBox, "point " + to_string(a) + " is outside the box");
  if (a.degree() > u1) {
    fail(ErrorCode::DegreeTooHigh,
         "deg" + to_string(a) + " = " + std::to_string(a.degree()) + " > " + std::to_string(u1));
  }
  return 1 + count_lex_above(shape, a, 0, u1);
}

PointSet shadow(const BoxShape& shape, std::span<const std::uint64_t> S) {
  std::vector<char> seen(shape.n(), 0);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t c : S) {
    if (c >= shape.n()) fail(ErrorCode::PointOutOfBox, "encoded point outside the box");
    if (!seen[c]) {
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    const std::uint64_t c = stack.back();
    stack.pop_back();
    std::uint64_t rest = c;
    for (std::size_t i = shape.m(); i-- > 0;) {
      const auto d = static_cast<std::uint64_t>(shape.dim(i));
      const std::uint64_t digit = rest % d;
      rest /= d;
      if (digit + 1 < d) {
        const std::uint64_t up = c + shape.place_value(i);
        if (!seen[up]) {
          seen[up] = 1;
          stack.push_back(up);
        }
      }
    }
  }
  PointSet out;
  for (std::uint64_t c = 0; c < shape.n(); ++c) {
    if (seen[c]) out.push_back(c);
  }
  return out;
}

PointSet footprint(const BoxShape& shape, std::span<const std::uint64_t> S) {
  const PointSet up = shadow(shape, S);
  PointSet out;
  out.reserve(shape.n() - up.size());
  auto it = up.begin();
  for (std::uint64_t c = 0; c < shape.n(); ++c) {
    if (it != up.end() && *it == c) {
      ++it;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

PointSet filter_degree(const BoxShape& shape, PointSet s, int u) {
  std::erase_if(s, [&](std::uint64_t c) { return shape.degree_of(c) != u; });
  return s;
}

}  // namespace

PointSet shadow_slice(const BoxShape& shape, std::span<const std::uint64_t> S, int u) {
  if (u < 0 || u > shape.k()) return {};
  return filter_degree(shape, shadow(shape, S), u);
}

PointSet footprint_slice(const BoxShape& shape, std::span<const std::uint64_t> S, int u) {
  if (u < 0 || u > shape.k()) return {};
  return filter_degree(shape, footprint(shape, S), u);
}

PointSet lex_prefix_of_slice(const BoxShape& shape, int u, std::uint64_t count) {
  const std::uint64_t size = (u < 0 || u > shape.k()) ? 0 : slice_size(shape, u);
  if (count > size) {
    fail(ErrorCode::CountOutOfRange,
         "count " + std::to_string(count) + " exceeds |F_" + std::to_string(u) + "| = " + std::to_string(size));
  }
  PointSet out;
  for (std::uint64_t c = shape.n(); c-- > 0 && out.size() < count;) {
    if (shape.degree_of(c) == u) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t shadow_card_of_leq_prefix(const BoxShape& shape, int d, std::uint64_t r) {
  const BoxPoint a_r = nth_band_element(shape, DegreeBand(-1, d), r);
  return shape.n() - shape.encode(a_r);
}

PointSet encode_all(const BoxShape& shape, std::span<const BoxPoint> points) {
  PointSet out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(shape.encode(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BoxPoint> decode_all(const BoxShape& shape, std::span<const std::uint64_t> codes) {
  std::vector<BoxPoint> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(shape.decode(c));
  return out;
}

}  // namespace rghw

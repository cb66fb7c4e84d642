#include "rghw/codes.hpp"

#include <ostream>

#include "rghw/error.hpp"
#include "rghw/polynomials.hpp"

namespace rghw {

namespace {

int checked_degree(const CartesianGrid& grid, int d) {
  if (d < -1 || d > grid.shape().k()) {
    fail(ErrorCode::DegreeOutOfRange, "degree bound " + std::to_string(d) + " outside -1.." +
                                          std::to_string(grid.shape().k()));
  }
  return d;
}

}  // namespace

CartesianCode::CartesianCode(CartesianGrid grid, int d)
    : grid_(std::move(grid)), d_(checked_degree(grid_, d)), echelon_(grid_.field(), grid_.size()) {
  const BoxShape& shape = grid_.shape();
  if (d_ >= 0) basis_ = enumerate_band_codes(shape, DegreeBand(-1, d_));
  generator_.reserve(basis_.size());
  for (std::uint64_t code : basis_) {
    const auto mono = MultiPoly::monomial(shape, grid_.field(), shape.decode(code), grid_.field().one());
    generator_.push_back(evaluate_on_grid(mono, grid_));
    if (!echelon_.insert(generator_.back())) {
      fail(ErrorCode::InvalidArgument, "evaluation map is not injective on this grid");
    }
  }
}

bool CartesianCode::contains(std::span<const FieldElement> v) const {
  if (v.size() != length()) {
    fail(ErrorCode::LengthMismatch, "vector of length " + std::to_string(v.size()) +
                                        " tested against code of length " + std::to_string(length()));
  }
  return echelon_.contains(v);
}

CartesianCode build_code(const CartesianGrid& grid, int d) { return CartesianCode(grid, d); }

std::vector<std::size_t> support_of_span(std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  std::vector<char> hit(n, 0);
  for (const auto& v : vectors) {
    if (v.size() != n) fail(ErrorCode::LengthMismatch, "vectors of different lengths");
    for (std::size_t t = 0; t < n; ++t) {
      if (!v[t].is_zero()) hit[t] = 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < n; ++t) {
    if (hit[t]) out.push_back(t);
  }
  return out;
}

bool membership(const CartesianCode& code, std::span<const FieldElement> v) { return code.contains(v); }

void write_generator_matrix(std::ostream& os, const CartesianCode& code) {
  for (const auto& row : code.generator()) {
    for (std::size_t t = 0; t < row.size(); ++t) os << (t ? " " : "") << row[t].value;
    os << '\n';
  }
}

}  // namespace rghw

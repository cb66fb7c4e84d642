#include <doctest.h>

#include <random>
#include <sstream>

#include "rghw/codes.hpp"
#include "rghw/polynomials.hpp"
#include "support/expect_error.hpp"

using namespace rghw;
using rghw::testing::error_of;

namespace {

FieldElement el(std::uint32_t v) { return FieldElement{static_cast<std::uint16_t>(v)}; }

// Minimum distance by listing every codeword; small codes only.
std::uint64_t min_distance(const CartesianCode& c) {
  const Field& f = c.field();
  const std::size_t k = c.dimension();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= f.order();
  std::uint64_t best = c.length();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vector w(c.length(), f.zero());
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < k; ++i, x /= f.order()) {
      const auto coef = f.element(static_cast<std::uint32_t>(x % f.order()));
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(coef, c.generator()[i][j]));
    }
    std::uint64_t wt = 0;
    for (auto e : w) wt += e.is_zero() ? 0 : 1;
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

}  // namespace

TEST_CASE("binary codes on the 2x2 grid") {
  Field f2(2);
  const auto grid = build_grid(f2, {2, 2});
  const auto c = build_code(grid, 1);
  CHECK(c.length() == 4);
  CHECK(c.dimension() == 3);
  CHECK(min_distance(c) == 2);

  const auto rep = build_code(grid, 0);
  CHECK(rep.dimension() == 1);
  CHECK(rep.generator()[0] == Vector(4, f2.one()));

  const auto full = build_code(grid, grid.shape().k());
  CHECK(full.dimension() == 4);
  CHECK(min_distance(full) == 1);

  const auto zero = build_code(grid, -1);
  CHECK(zero.dimension() == 0);
  CHECK(error_of([&] { (void)build_code(grid, 3); }) == ErrorCode::DegreeOutOfRange);
  CHECK(error_of([&] { (void)build_code(grid, -2); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("basis is the band below the degree bound in descending lex") {
  Field f3(3);
  const auto grid = build_grid(f3, {2, 3});
  const auto c = build_code(grid, 2);
  CHECK(c.basis() == enumerate_band_codes(grid.shape(), DegreeBand(-1, 2)));
  CHECK(c.dimension() == 5);
  std::ostringstream os;
  write_generator_matrix(os, c);
  // x1*x2 evaluated on points (0,0),(0,1),(0,2),(1,0),(1,1),(1,2)
  CHECK(os.str().substr(0, os.str().find('\n')) == "0 0 0 0 1 2");
}

TEST_CASE("membership") {
  Field f2(2);
  const auto grid = build_grid(f2, {2, 2});
  const auto c1 = build_code(grid, 1);
  const auto x1x2 = evaluate_on_grid(make_maximal_poly(grid, {1, 1}), grid);
  CHECK_FALSE(membership(c1, x1x2));
  CHECK(membership(build_code(grid, 2), x1x2));
  const auto x1 = evaluate_on_grid(make_maximal_poly(grid, {1, 0}), grid);
  CHECK(membership(c1, x1));
  CHECK(membership(c1, Vector(4, f2.zero())));
  CHECK(error_of([&] { (void)membership(c1, Vector(3, f2.zero())); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("codes are nested and dimensions count the bands") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    Field f(q);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}}) {
      if (dims.back() > static_cast<int>(q)) continue;
      const auto grid = build_grid(f, dims);
      const int k = grid.shape().k();
      for (int u1 = 0; u1 <= k; ++u1) {
        const auto c1 = build_code(grid, u1);
        for (int u2 = -1; u2 < u1; ++u2) {
          const auto c2 = build_code(grid, u2);
          for (const auto& row : c2.generator()) CHECK(c1.contains(row));
          CHECK(c1.dimension() - c2.dimension() == band_size(grid.shape(), DegreeBand(u2, u1)));
        }
      }
    }
  }
}

TEST_CASE("support_of_span") {
  Field f3(3);
  std::vector<Vector> vs{{el(0), el(1), el(0), el(0)}, {el(0), el(2), el(0), el(1)}};
  CHECK(support_of_span(vs) == std::vector<std::size_t>{1, 3});
  CHECK(support_of_span(std::span<const Vector>{}).empty());
  std::vector<Vector> bad{{el(1)}, {el(1), el(0)}};
  CHECK(error_of([&] { (void)support_of_span(bad); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("support of a span does not depend on the chosen basis") {
  Field f3(3);
  const auto grid = build_grid(f3, {3, 3});
  const auto code = build_code(grid, 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    // two random codewords and an invertible recombination of them
    std::vector<Vector> basis;
    for (int i = 0; i < 2; ++i) {
      Vector w(code.length(), f3.zero());
      for (const auto& row : code.generator()) {
        const auto c = f3.element(static_cast<std::uint32_t>(rng() % 3));
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f3.add(w[j], f3.mul(c, row[j]));
      }
      basis.push_back(w);
    }
    Vector sum(code.length());
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = f3.add(basis[0][j], f3.mul(el(2), basis[1][j]));
    std::vector<Vector> other{sum, basis[1]};
    CHECK(support_of_span(basis) == support_of_span(other));
  }
}

TEST_CASE("grids") {
  Field f4(4);
  const auto g = build_grid(f4, {2, 3}, std::vector<std::vector<std::uint32_t>>{{1, 3}, {0, 2, 3}});
  CHECK(g.subset(0) == std::vector<FieldElement>{el(1), el(3)});
  CHECK(g.point(5) == std::vector<FieldElement>{el(3), el(3)});
  CHECK(build_code(g, 1).dimension() == 3);

  const auto swapped = build_grid(f4, {3, 2}, std::vector<std::vector<std::uint32_t>>{{0, 2, 3}, {1, 3}});
  CHECK(swapped.shape().dims() == std::vector<int>{2, 3});
  CHECK(swapped.subset(0) == std::vector<FieldElement>{el(1), el(3)});

  Field f2(2);
  try {
    (void)build_grid(f2, {2, 3});
    FAIL("expected SubsetTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SubsetTooLarge);
    CHECK(std::string(e.what()).find("d_m = 3 > q = 2") != std::string::npos);
  }
  CHECK(error_of([&] { (void)build_grid(f4, {2}, std::vector<std::vector<std::uint32_t>>{{1, 1}}); }) ==
        ErrorCode::DuplicateElements);
  CHECK(error_of([&] { (void)build_grid(f4, {2}, std::vector<std::vector<std::uint32_t>>{{1, 2, 3}}); }) ==
        ErrorCode::LengthMismatch);
  CHECK(error_of([&] { (void)build_grid(f4, {2, 2}, std::vector<std::vector<std::uint32_t>>{{1, 2}}); }) ==
        ErrorCode::LengthMismatch);

  const auto last = build_grid(f4, {2, 3}, SubsetPolicy::last_elements);
  CHECK(last.subset(0) == std::vector<FieldElement>{el(2), el(3)});
}

#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "rghw/polynomials.hpp"
#include "support/expect_error.hpp"

using namespace rghw;
using rghw::testing::error_of;

namespace {

FieldElement el(std::uint32_t v) { return FieldElement{static_cast<std::uint16_t>(v)}; }

MultiPoly poly(const BoxShape& shape, const Field& field, std::vector<std::pair<BoxPoint, FieldElement>> terms) {
  return MultiPoly::from_terms(shape, field, terms);
}

std::uint64_t zeros_by_hand(std::span<const MultiPoly> fs, const CartesianGrid& grid) {
  std::uint64_t z = 0;
  for (std::uint64_t t = 0; t < grid.size(); ++t) {
    const auto p = grid.point(t);
    bool all = true;
    for (const auto& f : fs) all = all && f.evaluate(p).is_zero();
    z += all ? 1 : 0;
  }
  return z;
}

}  // namespace

TEST_CASE("leading term under graded lex") {
  BoxShape shape({3, 3});
  Field f(3);
  const auto g = poly(shape, f, {{{1, 1}, el(1)}, {{0, 2}, el(1)}});
  const auto lt = leading_term(g);
  REQUIRE(lt.has_value());
  CHECK(lt->exponent == BoxPoint{1, 1});
  CHECK(lt->coefficient == el(1));
  CHECK_FALSE(leading_term(MultiPoly(shape, f)).has_value());
  CHECK(MultiPoly(shape, f).degree() == -1);
  CHECK(render(MultiPoly(shape, f)) == "0");
  // higher degree wins over lex
  const auto h = poly(shape, f, {{{2, 0}, el(2)}, {{0, 2}, el(1)}, {{1, 2}, el(1)}});
  CHECK(leading_term(h)->exponent == BoxPoint{1, 2});
}

TEST_CASE("maximal polynomial examples") {
  Field f3(3);
  const auto g23 = build_grid(f3, {2, 3});
  const auto fb = make_maximal_poly(g23, {1, 2});
  CHECK(render(fb) == "x1*x2^2 + 2*x1*x2");
  CHECK(leading_term(fb)->exponent == BoxPoint{1, 2});

  Field f2(2);
  const auto g22 = build_grid(f2, {2, 2});
  CHECK(render(make_maximal_poly(g22, {1, 1})) == "x1*x2");
  CHECK(render(make_maximal_poly(g22, {0, 0})) == "1");
  CHECK(error_of([&] { (void)make_maximal_poly(g22, {2, 0}); }) == ErrorCode::PointOutOfBox);
}

TEST_CASE("evaluation and common zeros examples") {
  Field f2(2);
  const auto g22 = build_grid(f2, {2, 2});
  const BoxShape& s = g22.shape();
  const auto x1 = MultiPoly::monomial(s, f2, {1, 0}, el(1));
  const auto x2 = MultiPoly::monomial(s, f2, {0, 1}, el(1));
  CHECK(evaluate_on_grid(x1, g22) == std::vector<FieldElement>{el(0), el(0), el(1), el(1)});
  std::vector<MultiPoly> one{x1};
  CHECK(common_zero_count(one, g22) == 2);
  std::vector<MultiPoly> two{x1, x2};
  CHECK(common_zero_count(two, g22) == 1);
  CHECK(error_of([&] { (void)common_zero_count(std::span<const MultiPoly>{}, g22); }) == ErrorCode::EmptyFamily);

  Field f3(3);
  const auto g23 = build_grid(f3, {2, 3});
  std::vector<MultiPoly> fam{make_maximal_poly(g23, {1, 1}), make_maximal_poly(g23, {1, 0})};
  CHECK(common_zero_count(fam, g23) == 3);

  CHECK(error_of([&] { (void)evaluate_on_grid(x1, g23); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("footprint_count examples") {
  BoxShape s22({2, 2}), s23({2, 3});
  const std::vector<BoxPoint> x1{{1, 0}};
  CHECK(footprint_count(s22, x1) == 2);
  const std::vector<BoxPoint> one{{0, 0}};
  CHECK(footprint_count(s23, one) == 0);
  CHECK(footprint_count(s23, std::span<const BoxPoint>{}) == 6);
  const std::vector<BoxPoint> pair{{1, 1}, {0, 2}};
  CHECK(footprint_count(s23, pair) == 3);
}

TEST_CASE("arithmetic respects the box") {
  Field f5(5);
  BoxShape s({3, 3});
  const auto a = poly(s, f5, {{{1, 0}, el(2)}, {{0, 0}, el(1)}});
  const auto b = poly(s, f5, {{{0, 1}, el(3)}});
  const auto p = a * b;
  CHECK(p.coefficient({1, 1}) == el(1));
  CHECK(p.coefficient({0, 1}) == el(3));
  CHECK((a - a).is_zero());
  CHECK((a + a.scaled(el(4))).is_zero());
  const auto sq = poly(s, f5, {{{2, 0}, el(1)}});
  CHECK(error_of([&] { (void)(sq * sq); }) == ErrorCode::PointOutOfBox);
  CHECK(error_of([&] { (void)poly(s, f5, {{{3, 0}, el(1)}}); }) == ErrorCode::PointOutOfBox);
}

TEST_CASE("reduced_on_grid agrees with the unreduced function on the grid") {
  Field f4(4);
  const auto grid = build_grid(f4, {2, 3});
  // x1^3 * x2^4 + x1 + 1, evaluated directly
  const std::vector<std::pair<std::vector<int>, FieldElement>> terms{
      {{3, 4}, el(1)}, {{1, 0}, el(2)}, {{0, 0}, el(1)}};
  const auto g = MultiPoly::reduced_on_grid(grid, terms);
  for (const auto& [exp, c] : g.terms()) CHECK(grid.shape().contains(grid.shape().decode(exp)));
  for (std::uint64_t t = 0; t < grid.size(); ++t) {
    const auto p = grid.point(t);
    FieldElement direct = f4.zero();
    for (const auto& [exp, c] : terms) {
      FieldElement v = c;
      for (std::size_t i = 0; i < exp.size(); ++i) v = f4.mul(v, f4.pow(p[i], static_cast<std::uint32_t>(exp[i])));
      direct = f4.add(direct, v);
    }
    CHECK(g.evaluate(p) == direct);
  }
}

TEST_CASE("f_b vanishes exactly off the upper set of b") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    Field f(q);
    for (const std::vector<int>& dims : {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}}) {
      if (dims.back() > static_cast<int>(q)) continue;
      for (auto policy : {SubsetPolicy::first_elements, SubsetPolicy::last_elements}) {
        const auto grid = build_grid(f, dims, policy);
        for (std::uint64_t bc = 0; bc < grid.size(); ++bc) {
          const BoxPoint b = grid.shape().decode(bc);
          const auto fb = make_maximal_poly(grid, b);
          CHECK(leading_term(fb)->exponent == b);
          CHECK(leading_term(fb)->coefficient == f.one());
          const auto values = evaluate_on_grid(fb, grid);
          for (std::uint64_t t = 0; t < grid.size(); ++t) {
            // f_b(P) != 0 exactly when psi(P) >= b coordinatewise
            CHECK(values[t].is_zero() != brute::dominates(b.coords, grid.psi(t).coords));
          }
        }
      }
    }
  }
}

TEST_CASE("leading exponent of f_b over GF(4) up to (3,3)") {
  Field f4(4);
  const auto grid = build_grid(f4, {4, 4});
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      CHECK(leading_term(make_maximal_poly(grid, {i, j}))->exponent == BoxPoint{i, j});
    }
  }
}

TEST_CASE("footprint bound on seeded random families") {
  const std::uint64_t seed = 20240611;
  INFO("seed = " << seed);
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::uint32_t, std::vector<int>>> setups{
      {2, {2, 2, 2}}, {3, {2, 3}}, {3, {3, 3}}, {4, {3, 4}}, {4, {2, 2, 3}}};
  for (const auto& [q, dims] : setups) {
    Field f(q);
    const auto grid = build_grid(f, dims);
    const BoxShape& shape = grid.shape();
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 1 + static_cast<int>(rng() % 3);
      std::vector<MultiPoly> fam;
      std::vector<BoxPoint> lts;
      for (int i = 0; i < r; ++i) {
        MultiPoly g(shape, f);
        const std::uint64_t terms = 1 + rng() % 4;
        for (std::uint64_t t = 0; t < terms; ++t) {
          g.add_term(rng() % shape.n(), f.element(1 + static_cast<std::uint32_t>(rng() % (q - 1))));
        }
        if (g.is_zero()) continue;
        lts.push_back(leading_term(g)->exponent);
        fam.push_back(std::move(g));
      }
      if (fam.empty()) continue;
      const std::uint64_t z = common_zero_count(fam, grid);
      CHECK(z == zeros_by_hand(fam, grid));
      CHECK(z <= footprint_count(shape, lts));
    }
  }
}

TEST_CASE("maximal family examples") {
  Field f2(2);
  const auto g22 = build_grid(f2, {2, 2});
  const auto fam = maximal_family(g22, DegreeBand(-1, 1), 1);
  REQUIRE(fam.size() == 1);
  CHECK(render(fam[0]) == "x1");
  CHECK(g22.size() - common_zero_count(fam, g22) == 2);

  Field f3(3);
  const auto g23 = build_grid(f3, {2, 3});
  const auto fam2 = maximal_family(g23, DegreeBand(0, 2), 1);
  CHECK(g23.size() - common_zero_count(fam2, g23) == 2);
  CHECK(error_of([&] { (void)maximal_family(g23, DegreeBand(0, 2), 5); }) == ErrorCode::RankOutOfRange);
}

TEST_CASE("maximal families have distinct band leading terms and independent residues") {
  Field f3(3);
  const auto grid = build_grid(f3, {3, 3});
  const BoxShape& shape = grid.shape();
  for (int u1 = 0; u1 <= shape.k(); ++u1) {
    for (int u2 = -1; u2 < u1; ++u2) {
      const DegreeBand band(u2, u1);
      const auto desc = brute::band_desc(shape.dims(), u2, u1);
      const auto fam = maximal_family(grid, band, desc.size());
      for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(fam[i].degree() <= u1);
        CHECK(fam[i].degree() > u2);
        CHECK(leading_term(fam[i])->exponent.coords == desc[i]);
      }
    }
  }
}

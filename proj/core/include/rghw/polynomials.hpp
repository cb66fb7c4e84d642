#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rghw/boxcomb.hpp"
#include "rghw/gf.hpp"
#include "rghw/grid.hpp"

namespace rghw {

/// Graded lex on box codes: total degree first, then lex (= code order).
bool glex_less(const BoxShape& shape, std::uint64_t a, std::uint64_t b);

struct LeadingTerm {
  BoxPoint exponent;
  FieldElement coefficient;
};

/// Sparse polynomial in x_1..x_m with deg_{x_i} <= d_i - 1. Terms are keyed
/// by the box code of their exponent; zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly(BoxShape shape, Field field) : shape_(std::move(shape)), field_(std::move(field)) {}

  /// Terms with exponents outside the box are rejected (Error{PointOutOfBox}).
  /// Repeated exponents are summed.
  static MultiPoly from_terms(const BoxShape& shape, const Field& field,
                              std::span<const std::pair<BoxPoint, FieldElement>> terms);

  /// Exponents outside the box are reduced with x_i^{d_i} = x_i^{d_i} -
  /// prod_{g in A_i}(x_i - g), which vanishes on the grid.
  static MultiPoly reduced_on_grid(const CartesianGrid& grid,
                                   std::span<const std::pair<std::vector<int>, FieldElement>> terms);

  static MultiPoly constant(const BoxShape& shape, const Field& field, FieldElement c);
  static MultiPoly monomial(const BoxShape& shape, const Field& field, const BoxPoint& exponent,
                            FieldElement c);

  const BoxShape& shape() const noexcept { return shape_; }
  const Field& field() const noexcept { return field_; }
  const std::map<std::uint64_t, FieldElement>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  FieldElement coefficient(const BoxPoint& exponent) const;

  MultiPoly& add_term(std::uint64_t code, FieldElement c);
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly scaled(FieldElement c) const;
  /// Throws Error{PointOutOfBox} if the product leaves the box.
  MultiPoly operator*(const MultiPoly& other) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const MultiPoly& other) const;

  BoxShape shape_;
  Field field_;
  std::map<std::uint64_t, FieldElement> terms_;
};

/// Graded-lex maximal term; nullopt for the zero polynomial.
std::optional<LeadingTerm> leading_term(const MultiPoly& f);

/// "x1*x2^2 + 2*x1*x2", terms in descending graded lex, coefficients as
/// canonical encodings. "0" for the zero polynomial.
std::string render(const MultiPoly& f);

/// f_b = prod_i prod_{j <= b_i} (x_i - gamma_{i,j}).
MultiPoly make_maximal_poly(const CartesianGrid& grid, const BoxPoint& b);

/// (f(P_1), ..., f(P_n)) in grid order. Throws Error{ShapeMismatch}.
std::vector<FieldElement> evaluate_on_grid(const MultiPoly& f, const CartesianGrid& grid);

/// |Z_A(f_1, ..., f_r)|. Throws Error{EmptyFamily} or Error{ShapeMismatch}.
std::uint64_t common_zero_count(std::span<const MultiPoly> fs, const CartesianGrid& grid);

/// Number of reduced monomials divisible by none of the given leading
/// exponents, i.e. |footprint(lts)|.
std::uint64_t footprint_count(const BoxShape& shape, std::span<const BoxPoint> lts);

/// [f_{a_1}, ..., f_{a_r}] for the first r band elements in descending lex.
/// Throws Error{RankOutOfRange}.
std::vector<MultiPoly> maximal_family(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r);

}  // namespace rghw

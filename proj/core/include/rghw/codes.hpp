#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rghw/boxcomb.hpp"
#include "rghw/grid.hpp"
#include "rghw/linalg.hpp"

namespace rghw {

/// AC_q(d, A): evaluations on the grid of all reduced polynomials of total
/// degree <= d. d = -1 gives the zero code.
///
/// Row i of the generator matrix is the evaluation of x^{basis[i]}, with the
/// basis listed in descending lex. The echelon form used for membership
/// tests is built at construction.
class CartesianCode {
 public:
  CartesianCode(CartesianGrid grid, int d);

  const CartesianGrid& grid() const noexcept { return grid_; }
  const Field& field() const noexcept { return grid_.field(); }
  int degree_bound() const noexcept { return d_; }
  std::uint64_t length() const noexcept { return grid_.size(); }
  std::size_t dimension() const noexcept { return generator_.size(); }

  /// Box codes of the monomial basis, descending lex.
  const std::vector<std::uint64_t>& basis() const noexcept { return basis_; }
  const std::vector<Vector>& generator() const noexcept { return generator_; }
  const EchelonBasis& echelon() const noexcept { return echelon_; }

  /// Throws Error{LengthMismatch}.
  bool contains(std::span<const FieldElement> v) const;

 private:
  CartesianGrid grid_;
  int d_;
  std::vector<std::uint64_t> basis_;
  std::vector<Vector> generator_;
  EchelonBasis echelon_;
};

/// Throws Error{DegreeOutOfRange} unless -1 <= d <= k.
CartesianCode build_code(const CartesianGrid& grid, int d);

/// Positions (0-based) where some vector is nonzero; equals the support of
/// the span. Throws Error{LengthMismatch}.
std::vector<std::size_t> support_of_span(std::span<const Vector> vectors);

bool membership(const CartesianCode& code, std::span<const FieldElement> v);

/// One row per line, canonical encodings separated by single spaces.
void write_generator_matrix(std::ostream& os, const CartesianCode& code);

}  // namespace rghw

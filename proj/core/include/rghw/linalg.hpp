#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rghw/gf.hpp"

namespace rghw {

using Vector = std::vector<FieldElement>;

/// Incrementally built semi-echelon basis of a subspace of GF(q)^n. Row j
/// is zero on the pivots of rows 0..j-1 and has a 1 on its own pivot, which
/// is enough for sequential reduction to land in the complement.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t length) : field_(std::move(field)), length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection onto the span along the pivots.
  Vector reduce(std::span<const FieldElement> v) const;
  bool contains(std::span<const FieldElement> v) const;
  /// Adds v; returns false (and leaves the basis unchanged) if v is
  /// already in the span.
  bool insert(std::span<const FieldElement> v);

 private:
  Field field_;
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the given vectors. Throws Error{LengthMismatch} on ragged input.
std::size_t rank_of(const Field& field, std::span<const Vector> rows);

/// Reduced row echelon form; pivots ascending.
struct RowEchelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(const Field& field, std::span<const Vector> rows);

}  // namespace rghw

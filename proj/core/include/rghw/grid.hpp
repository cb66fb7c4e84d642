#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rghw/boxcomb.hpp"
#include "rghw/gf.hpp"

namespace rghw {

/// How build_grid picks A_i when no explicit subsets are given.
enum class SubsetPolicy {
  first_elements,  // the d_i smallest encodings
  last_elements,   // the d_i largest encodings
};

/// A = A_1 x ... x A_m with |A_i| = d_i. Point P_t is the grid point whose
/// index vector (j_1, ..., j_m), gamma_{i,j_i} in A_i, has mixed-radix code
/// t, so the map to the box (psi) is the identity on positions.
class CartesianGrid {
 public:
  CartesianGrid(Field field, std::vector<std::vector<FieldElement>> subsets);

  const Field& field() const noexcept { return field_; }
  const BoxShape& shape() const noexcept { return shape_; }
  std::uint64_t size() const noexcept { return shape_.n(); }
  const std::vector<std::vector<FieldElement>>& subsets() const noexcept { return subsets_; }
  const std::vector<FieldElement>& subset(std::size_t i) const { return subsets_[i]; }

  std::vector<FieldElement> point(std::uint64_t t) const;

  /// Box index psi(P_t) of the t-th point, which is decode(t).
  BoxPoint psi(std::uint64_t t) const { return shape_.decode(t); }

 private:
  Field field_;
  BoxShape shape_;
  std::vector<std::vector<FieldElement>> subsets_;
};

/// Throws Error{SubsetTooLarge} if some d_i > q. Sizes are sorted ascending
/// (see BoxShape::permutation()).
CartesianGrid build_grid(const Field& field, const std::vector<int>& sizes,
                         SubsetPolicy policy = SubsetPolicy::first_elements);

/// Explicit A_i. subsets[i] must have the size sizes[i] and distinct
/// elements; both lists are reordered together by ascending size.
/// Throws Error{SubsetTooLarge}, Error{DuplicateElements}, Error{LengthMismatch}.
CartesianGrid build_grid(const Field& field, const std::vector<int>& sizes,
                         const std::vector<std::vector<std::uint32_t>>& subsets);

}  // namespace rghw

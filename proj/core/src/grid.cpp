#include "rghw/grid.hpp"

#include <algorithm>
#include <set>

#include "rghw/error.hpp"

namespace rghw {

namespace {

std::vector<int> sizes_of(const std::vector<std::vector<FieldElement>>& subsets) {
  std::vector<int> sizes;
  for (const auto& s : subsets) sizes.push_back(static_cast<int>(s.size()));
  return sizes;
}

void check_sizes(const Field& field, const std::vector<int>& sizes) {
  for (int d : sizes) {
    if (d < 1) fail(ErrorCode::InvalidShape, "subset sizes must be positive");
    if (static_cast<std::uint32_t>(d) > field.order()) {
      fail(ErrorCode::SubsetTooLarge,
           "d_m = " + std::to_string(*std::max_element(sizes.begin(), sizes.end())) +
               " > q = " + std::to_string(field.order()));
    }
  }
}

}  // namespace

CartesianGrid::CartesianGrid(Field field, std::vector<std::vector<FieldElement>> subsets)
    : field_(std::move(field)), shape_(sizes_of(subsets)) {
  check_sizes(field_, sizes_of(subsets));
  for (const auto& s : subsets) {
    std::set<FieldElement> distinct;
    for (FieldElement x : s) {
      if (x.value >= field_.order()) fail(ErrorCode::InvalidArgument, "subset element outside the field");
      if (!distinct.insert(x).second) {
        fail(ErrorCode::DuplicateElements, "subset contains element " + std::to_string(x.value) + " twice");
      }
    }
  }
  if (shape_.was_permuted()) {
    for (std::size_t i : shape_.permutation()) subsets_.push_back(subsets[i]);
  } else {
    subsets_ = std::move(subsets);
  }
}

std::vector<FieldElement> CartesianGrid::point(std::uint64_t t) const {
  const BoxPoint idx = shape_.decode(t);
  std::vector<FieldElement> out(shape_.m());
  for (std::size_t i = 0; i < shape_.m(); ++i) out[i] = subsets_[i][static_cast<std::size_t>(idx[i])];
  return out;
}

CartesianGrid build_grid(const Field& field, const std::vector<int>& sizes, SubsetPolicy policy) {
  check_sizes(field, sizes);
  const auto elems = field.elements();
  std::vector<std::vector<FieldElement>> subsets;
  for (int d : sizes) {
    const auto count = static_cast<std::size_t>(d);
    if (policy == SubsetPolicy::first_elements) {
      subsets.emplace_back(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(count));
    } else {
      subsets.emplace_back(elems.end() - static_cast<std::ptrdiff_t>(count), elems.end());
    }
  }
  return CartesianGrid(field, std::move(subsets));
}

CartesianGrid build_grid(const Field& field, const std::vector<int>& sizes,
                         const std::vector<std::vector<std::uint32_t>>& subsets) {
  if (subsets.size() != sizes.size()) {
    fail(ErrorCode::LengthMismatch, "expected " + std::to_string(sizes.size()) + " subsets, got " +
                                        std::to_string(subsets.size()));
  }
  check_sizes(field, sizes);
  std::vector<std::vector<FieldElement>> converted;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (subsets[i].size() != static_cast<std::size_t>(sizes[i])) {
      fail(ErrorCode::LengthMismatch, "subset A_" + std::to_string(i + 1) + " has " +
                                          std::to_string(subsets[i].size()) + " elements, expected " +
                                          std::to_string(sizes[i]));
    }
    std::vector<FieldElement> row;
    for (std::uint32_t v : subsets[i]) row.push_back(field.element(v));
    converted.push_back(std::move(row));
  }
  return CartesianGrid(field, std::move(converted));
}

}  // namespace rghw

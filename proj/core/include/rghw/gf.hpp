#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rghw {

/// Canonical integer encoding of an element of GF(p^e): the base-p digits of
/// the value are the coefficients (lowest degree first) of the polynomial
/// representative modulo the field's modulus. 0 and 1 are the identities.
struct FieldElement {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
  constexpr bool is_zero() const noexcept { return value == 0; }
};

/// GF(q) for prime powers 2 <= q <= 2^16.
///
/// Extension fields use the smallest monic irreducible polynomial of degree
/// e over GF(p), where polynomials are ordered by the integer formed from
/// their coefficients read as base-p digits (so x^3+x+1 precedes x^3+x^2+1).
/// Fields with q <= 256 are fully tabulated; larger fields compute products
/// by polynomial multiplication on demand.
///
/// Copies share the immutable tables, so passing a Field by value is cheap.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kTableLimit = 256;

  /// Throws Error{NotAPrimePower} or Error{FieldTooLarge}.
  explicit Field(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }

  /// Coefficients of the modulus, lowest degree first, including the leading
  /// 1. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return FieldElement{0}; }
  FieldElement one() const noexcept { return FieldElement{1}; }

  /// Checked conversion from the canonical encoding.
  FieldElement element(std::uint32_t value) const;

  /// All q elements in ascending encoding order.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws Error{DivisionByZero} for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t exponent) const;

  /// Renders the modulus as a polynomial in x, e.g. "x^2 + x + 1".
  std::string modulus_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.q_ == b.q_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;

  FieldElement add_slow(FieldElement a, FieldElement b) const;
  FieldElement neg_slow(FieldElement a) const;
  FieldElement mul_slow(FieldElement a, FieldElement b) const;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// Returns (p, e) with q = p^e, or throws Error{NotAPrimePower}.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q);

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree <= deg/2. Coefficients are lowest degree first; poly must be monic.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace rghw

#include "rghw/gf.hpp"

#include <sstream>

#include "rghw/error.hpp"

namespace rghw {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), low first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and a != 0 (mod p): a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t value, std::uint32_t p, std::uint32_t count) {
  Poly d(count, 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t value_of(const Poly& digits, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

}  // namespace

struct Field::Tables {
  std::vector<std::uint16_t> add;  // q*q
  std::vector<std::uint16_t> mul;  // q*q
  std::vector<std::uint16_t> neg;  // q
  std::vector<std::uint16_t> inv;  // q, inv[0] unused
};

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q) {
  if (q < 2) fail(ErrorCode::NotAPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  std::uint32_t p = 0;
  for (std::uint32_t t = 2; t * t <= q; ++t) {
    if (q % t == 0) {
      p = t;
      break;
    }
  }
  if (p == 0) return {q, 1};
  std::uint32_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    fail(ErrorCode::NotAPrimePower,
         "q = " + std::to_string(q) + " has at least two distinct prime factors");
  }
  return {p, e};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t fd = 1; fd <= deg / 2; ++fd) {
    // Every monic polynomial of degree fd: low coefficients enumerate p^fd.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < fd; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly f = digits_of(static_cast<std::uint32_t>(t), p, static_cast<std::uint32_t>(fd));
      f.push_back(1);
      if (poly_mod(poly, f, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t q) {
  if (q > kMaxOrder) {
    fail(ErrorCode::FieldTooLarge, "q = " + std::to_string(q) + " exceeds 2^16");
  }
  auto [p, e] = prime_power_decomposition(q);
  q_ = q;
  p_ = p;
  e_ = e;

  if (e_ > 1) {
    std::uint32_t low_count = q_;  // p^e choices for the non-leading coefficients
    for (std::uint32_t t = 0; t < low_count; ++t) {
      Poly candidate = digits_of(t, p_, e_);
      candidate.push_back(1);
      if (candidate[0] == 0) continue;  // divisible by x
      if (is_irreducible(candidate, p_)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
  }

  if (q_ <= kTableLimit) {
    auto t = std::make_shared<Tables>();
    t->add.resize(static_cast<std::size_t>(q_) * q_);
    t->mul.resize(static_cast<std::size_t>(q_) * q_);
    t->neg.resize(q_);
    t->inv.resize(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      t->neg[a] = neg_slow(FieldElement{static_cast<std::uint16_t>(a)}).value;
      for (std::uint32_t b = 0; b < q_; ++b) {
        const FieldElement fa{static_cast<std::uint16_t>(a)}, fb{static_cast<std::uint16_t>(b)};
        t->add[a * q_ + b] = add_slow(fa, fb).value;
        t->mul[a * q_ + b] = mul_slow(fa, fb).value;
        if (t->mul[a * q_ + b] == 1) t->inv[a] = static_cast<std::uint16_t>(b);
      }
    }
    tables_ = std::move(t);
  }
}

FieldElement Field::element(std::uint32_t value) const {
  if (value >= q_) {
    fail(ErrorCode::InvalidArgument,
         "encoding " + std::to_string(value) + " is not below q = " + std::to_string(q_));
  }
  return FieldElement{static_cast<std::uint16_t>(value)};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out[v] = FieldElement{static_cast<std::uint16_t>(v)};
  return out;
}

FieldElement Field::add_slow(FieldElement a, FieldElement b) const {
  if (e_ == 1) return FieldElement{static_cast<std::uint16_t>((a.value + b.value) % p_)};
  std::uint32_t x = a.value, y = b.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return FieldElement{static_cast<std::uint16_t>(out)};
}

FieldElement Field::neg_slow(FieldElement a) const {
  if (e_ == 1) return FieldElement{static_cast<std::uint16_t>((p_ - a.value) % p_)};
  std::uint32_t x = a.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return FieldElement{static_cast<std::uint16_t>(out)};
}

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
  if (e_ == 1) {
    return FieldElement{static_cast<std::uint16_t>(
        static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  const Poly x = digits_of(a.value, p_, e_), y = digits_of(b.value, p_, e_);
  Poly prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    for (std::uint32_t j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(e_, 0);
  return FieldElement{static_cast<std::uint16_t>(value_of(r, p_))};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (tables_) return FieldElement{tables_->add[a.value * q_ + b.value]};
  return add_slow(a, b);
}

FieldElement Field::neg(FieldElement a) const {
  if (tables_) return FieldElement{tables_->neg[a.value]};
  return neg_slow(a);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (tables_) return FieldElement{tables_->mul[a.value * q_ + b.value]};
  return mul_slow(a, b);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (tables_) return FieldElement{tables_->inv[a.value]};
  return pow(a, q_ - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t exponent) const {
  FieldElement result = one(), base = a;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string Field::modulus_string() const {
  if (modulus_.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace rghw

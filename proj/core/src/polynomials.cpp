#include "rghw/polynomials.hpp"

#include <algorithm>
#include <sstream>

#include "rghw/error.hpp"

namespace rghw {

bool glex_less(const BoxShape& shape, std::uint64_t a, std::uint64_t b) {
  const int da = shape.degree_of(a), db = shape.degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::from_terms(const BoxShape& shape, const Field& field,
                                std::span<const std::pair<BoxPoint, FieldElement>> terms) {
  MultiPoly f(shape, field);
  for (const auto& [exp, c] : terms) {
    if (c.value >= field.order()) fail(ErrorCode::InvalidArgument, "coefficient outside the field");
    f.add_term(shape.encode(exp), c);
  }
  return f;
}

MultiPoly MultiPoly::reduced_on_grid(const CartesianGrid& grid,
                                     std::span<const std::pair<std::vector<int>, FieldElement>> terms) {
  const BoxShape& shape = grid.shape();
  const Field& field = grid.field();
  const std::size_t m = shape.m();

  // Univariate reductions x_i^e mod prod_{g in A_i}(x_i - g), coefficients
  // indexed by power 0..d_i-1.
  auto reduce_power = [&](std::size_t i, int e) {
    const auto d = static_cast<std::size_t>(shape.dim(i));
    // vanishing polynomial g_i = x^d + lower, stored low first
    std::vector<FieldElement> g{field.one()};
    for (FieldElement gamma : grid.subset(i)) {
      std::vector<FieldElement> next(g.size() + 1, field.zero());
      for (std::size_t t = 0; t < g.size(); ++t) {
        next[t + 1] = field.add(next[t + 1], g[t]);
        next[t] = field.sub(next[t], field.mul(g[t], gamma));
      }
      g = std::move(next);
    }
    std::vector<FieldElement> r(static_cast<std::size_t>(e) + 1, field.zero());
    r[static_cast<std::size_t>(e)] = field.one();
    for (std::size_t top = r.size(); top-- > d;) {
      const FieldElement lead = r[top];
      if (lead.is_zero()) continue;
      for (std::size_t t = 0; t <= d; ++t) {
        r[top - d + t] = field.sub(r[top - d + t], field.mul(lead, g[t]));
      }
    }
    r.resize(std::min(r.size(), d), field.zero());
    return r;
  };

  MultiPoly out(shape, field);
  for (const auto& [exp, c] : terms) {
    if (exp.size() != m) fail(ErrorCode::ShapeMismatch, "exponent vector has wrong length");
    MultiPoly term = MultiPoly::constant(shape, field, c);
    for (std::size_t i = 0; i < m; ++i) {
      if (exp[i] < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
      const auto uni = reduce_power(i, exp[i]);
      MultiPoly factor(shape, field);
      for (std::size_t pw = 0; pw < uni.size(); ++pw) {
        if (uni[pw].is_zero()) continue;
        std::vector<int> e(m, 0);
        e[i] = static_cast<int>(pw);
        factor.add_term(shape.encode(BoxPoint(e)), uni[pw]);
      }
      term = term * factor;
    }
    out = out + term;
  }
  return out;
}

MultiPoly MultiPoly::constant(const BoxShape& shape, const Field& field, FieldElement c) {
  MultiPoly f(shape, field);
  f.add_term(0, c);
  return f;
}

MultiPoly MultiPoly::monomial(const BoxShape& shape, const Field& field, const BoxPoint& exponent,
                              FieldElement c) {
  MultiPoly f(shape, field);
  f.add_term(shape.encode(exponent), c);
  return f;
}

int MultiPoly::degree() const {
  int deg = -1;
  for (const auto& [code, c] : terms_) deg = std::max(deg, shape_.degree_of(code));
  return deg;
}

FieldElement MultiPoly::coefficient(const BoxPoint& exponent) const {
  auto it = terms_.find(shape_.encode(exponent));
  return it == terms_.end() ? field_.zero() : it->second;
}

MultiPoly& MultiPoly::add_term(std::uint64_t code, FieldElement c) {
  if (code >= shape_.n()) fail(ErrorCode::PointOutOfBox, "monomial outside the box");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(code, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (!(shape_ == other.shape_)) fail(ErrorCode::ShapeMismatch, "polynomials over different boxes");
  if (!(field_ == other.field_)) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  require_compatible(other);
  MultiPoly out = *this;
  for (const auto& [code, c] : other.terms_) out.add_term(code, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + other.scaled(field_.neg(field_.one())); }

MultiPoly MultiPoly::scaled(FieldElement c) const {
  MultiPoly out(shape_, field_);
  for (const auto& [code, coeff] : terms_) out.add_term(code, field_.mul(coeff, c));
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  require_compatible(other);
  MultiPoly out(shape_, field_);
  for (const auto& [ca, a] : terms_) {
    const BoxPoint ea = shape_.decode(ca);
    for (const auto& [cb, b] : other.terms_) {
      const BoxPoint eb = shape_.decode(cb);
      BoxPoint sum = ea;
      for (std::size_t i = 0; i < sum.size(); ++i) sum.coords[i] += eb[i];
      if (!shape_.contains(sum)) {
        fail(ErrorCode::PointOutOfBox, "product exponent " + to_string(sum) + " leaves the box");
      }
      out.add_term(shape_.encode(sum), field_.mul(a, b));
    }
  }
  return out;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != shape_.m()) fail(ErrorCode::ShapeMismatch, "point has wrong number of coordinates");
  FieldElement acc = field_.zero();
  for (const auto& [code, c] : terms_) {
    const BoxPoint e = shape_.decode(code);
    FieldElement v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      v = field_.mul(v, field_.pow(point[i], static_cast<std::uint64_t>(e[i])));
    }
    acc = field_.add(acc, v);
  }
  return acc;
}

std::optional<LeadingTerm> leading_term(const MultiPoly& f) {
  if (f.is_zero()) return std::nullopt;
  const BoxShape& shape = f.shape();
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
    if (glex_less(shape, best->first, it->first)) best = it;
  }
  return LeadingTerm{shape.decode(best->first), best->second};
}

std::string render(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  const BoxShape& shape = f.shape();
  std::vector<std::pair<std::uint64_t, FieldElement>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return glex_less(shape, b.first, a.first); });
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) os << " + ";
    const BoxPoint e = shape.decode(terms[t].first);
    const FieldElement c = terms[t].second;
    bool wrote = false;
    if (c.value != 1 || e.degree() == 0) {
      os << c.value;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly make_maximal_poly(const CartesianGrid& grid, const BoxPoint& b) {
  const BoxShape& shape = grid.shape();
  const Field& field = grid.field();
  if (b.size() != shape.m()) fail(ErrorCode::ShapeMismatch, "exponent " + to_string(b) + " has wrong length");
  if (!shape.contains(b)) fail(ErrorCode::PointOutOfBox, "exponent " + to_string(b) + " is outside the box");
  MultiPoly f = MultiPoly::constant(shape, field, field.one());
  for (std::size_t i = 0; i < shape.m(); ++i) {
    std::vector<int> unit(shape.m(), 0);
    unit[i] = 1;
    const std::uint64_t xi = shape.encode(BoxPoint(unit));
    for (int j = 0; j < b[i]; ++j) {
      MultiPoly factor(shape, field);
      factor.add_term(xi, field.one());
      factor.add_term(0, field.neg(grid.subset(i)[static_cast<std::size_t>(j)]));
      f = f * factor;
    }
  }
  return f;
}

std::vector<FieldElement> evaluate_on_grid(const MultiPoly& f, const CartesianGrid& grid) {
  if (!(f.shape() == grid.shape())) fail(ErrorCode::ShapeMismatch, "polynomial and grid have different shapes");
  if (!(f.field() == grid.field())) fail(ErrorCode::FieldMismatch, "polynomial and grid over different fields");
  const BoxShape& shape = grid.shape();
  const Field& field = grid.field();
  const std::size_t m = shape.m();

  // powers[i][j][e] = gamma_{i,j}^e
  std::vector<std::vector<std::vector<FieldElement>>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (FieldElement g : grid.subset(i)) {
      std::vector<FieldElement> row(static_cast<std::size_t>(shape.dim(i)));
      FieldElement acc = field.one();
      for (auto& slot : row) {
        slot = acc;
        acc = field.mul(acc, g);
      }
      powers[i].push_back(std::move(row));
    }
  }
  std::vector<std::pair<BoxPoint, FieldElement>> terms;
  for (const auto& [code, c] : f.terms()) terms.emplace_back(shape.decode(code), c);

  std::vector<FieldElement> out(shape.n(), field.zero());
  for (std::uint64_t t = 0; t < shape.n(); ++t) {
    const BoxPoint idx = shape.decode(t);
    FieldElement acc = field.zero();
    for (const auto& [e, c] : terms) {
      FieldElement v = c;
      for (std::size_t i = 0; i < m; ++i) {
        v = field.mul(v, powers[i][static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(e[i])]);
      }
      acc = field.add(acc, v);
    }
    out[t] = acc;
  }
  return out;
}

std::uint64_t common_zero_count(std::span<const MultiPoly> fs, const CartesianGrid& grid) {
  if (fs.empty()) fail(ErrorCode::EmptyFamily, "common zeros of an empty family");
  std::vector<char> zero(grid.size(), 1);
  for (const auto& f : fs) {
    const auto values = evaluate_on_grid(f, grid);
    for (std::uint64_t t = 0; t < values.size(); ++t) {
      if (!values[t].is_zero()) zero[t] = 0;
    }
  }
  return static_cast<std::uint64_t>(std::count(zero.begin(), zero.end(), 1));
}

std::uint64_t footprint_count(const BoxShape& shape, std::span<const BoxPoint> lts) {
  const PointSet codes = encode_all(shape, lts);
  return shape.n() - shadow(shape, codes).size();
}

std::vector<MultiPoly> maximal_family(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r) {
  const BoxShape& shape = grid.shape();
  validate_band(shape, band);
  const std::uint64_t total = band_size(shape, band);
  if (r < 1 || r > total) {
    fail(ErrorCode::RankOutOfRange, "r = " + std::to_string(r) + " outside 1.." + std::to_string(total));
  }
  std::vector<MultiPoly> family;
  family.reserve(r);
  for (std::uint64_t i = 1; i <= r; ++i) {
    family.push_back(make_maximal_poly(grid, nth_band_element(shape, band, i)));
  }
  return family;
}

}  // namespace rghw

#include "rghw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <unordered_map>

#include "rghw/error.hpp"

namespace rghw {

void OracleBudget::validate() const {
  if (max_states == 0) fail(ErrorCode::InvalidArgument, "oracle state cap must be positive");
  if (time_cap_seconds == 0) fail(ErrorCode::InvalidArgument, "oracle time cap must be positive");
}

std::string_view to_string(OracleMethod method) noexcept {
  switch (method) {
    case OracleMethod::subspace_echelon: return "subspace_echelon";
    case OracleMethod::subspace_graph: return "subspace_graph";
    case OracleMethod::coordinate_windows: return "coordinate_windows";
    case OracleMethod::polynomial_families: return "polynomial_families";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class StateMeter {
 public:
  explicit StateMeter(const OracleBudget& budget) : budget_(budget), start_(Clock::now()) {
    budget_.validate();
  }

  void tick(std::uint64_t count = 1) {
    states_ += count;
    if (states_ > budget_.max_states) {
      throw BudgetExceeded(states_, "state cap of " + std::to_string(budget_.max_states) + " exceeded");
    }
    if (states_ - last_time_check_ >= 4096) {
      last_time_check_ = states_;
      check_time();
    }
  }

  /// Fails fast when a fixed amount of upcoming work cannot fit.
  void reserve(std::uint64_t count) const {
    if (count > budget_.max_states || states_ + count > budget_.max_states) {
      throw BudgetExceeded(states_, "enumeration of " + std::to_string(count) + " states exceeds the cap of " +
                                        std::to_string(budget_.max_states));
    }
  }

  void check_time() const {
    if (Clock::now() - start_ > std::chrono::seconds(budget_.time_cap_seconds)) {
      throw BudgetExceeded(states_, "time cap of " + std::to_string(budget_.time_cap_seconds) + " s exceeded");
    }
  }

  std::uint64_t states() const noexcept { return states_; }

 private:
  OracleBudget budget_;
  Clock::time_point start_;
  std::uint64_t states_ = 0;
  std::uint64_t last_time_check_ = 0;
};

// q^e, or max+1 when it does not fit below `cap`.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (out > cap / q) return cap + 1;
    out *= q;
  }
  return out;
}

bool same_grid(const CartesianGrid& a, const CartesianGrid& b) {
  return a.field() == b.field() && a.shape() == b.shape() && a.subsets() == b.subsets();
}

std::uint64_t check_nesting(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r) {
  if (!same_grid(c1.grid(), c2.grid())) fail(ErrorCode::InvalidNesting, "codes live on different grids");
  if (c2.dimension() >= c1.dimension()) {
    fail(ErrorCode::InvalidNesting, "C2 must be a proper subcode of C1");
  }
  for (const auto& row : c2.generator()) {
    if (!c1.contains(row)) fail(ErrorCode::InvalidNesting, "C2 is not contained in C1");
  }
  const std::uint64_t ell = c1.dimension() - c2.dimension();
  if (r < 1 || r > ell) {
    fail(ErrorCode::RankOutOfRange, "r = " + std::to_string(r) + " outside 1.." + std::to_string(ell));
  }
  return ell;
}

std::uint64_t support_mask(std::span<const FieldElement> v) {
  std::uint64_t mask = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!v[t].is_zero()) mask |= std::uint64_t{1} << t;
  }
  return mask;
}

// All q^dim combinations of the generator rows, in ascending coefficient
// encoding (first row's coefficient most significant).
std::vector<Vector> all_codewords(const Field& field, const std::vector<Vector>& generator, std::size_t n,
                                  StateMeter& meter) {
  const std::uint64_t q = field.order();
  const std::uint64_t count = checked_power(q, generator.size(), std::uint64_t{1} << 40);
  meter.reserve(count);
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<std::uint32_t> digits(generator.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    meter.tick();
    std::uint64_t rest = idx;
    for (std::size_t j = generator.size(); j-- > 0;) {
      digits[j] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    Vector w(n, field.zero());
    for (std::size_t j = 0; j < generator.size(); ++j) {
      if (digits[j] == 0) continue;
      const FieldElement c{static_cast<std::uint16_t>(digits[j])};
      for (std::size_t t = 0; t < n; ++t) w[t] = field.add(w[t], field.mul(c, generator[j][t]));
    }
    out.push_back(std::move(w));
  }
  return out;
}

// Enumerates every r-dimensional subspace D of C1 exactly once through its
// reduced row echelon basis in coordinates: row i has its leading 1 at
// pivot p_i, p_1 < ... < p_r, and every row vanishes on the other pivots.
// D meets C2 trivially iff the rows stay independent modulo C2, which is
// tracked through their residues against C2's echelon basis.
class EchelonSearch {
 public:
  EchelonSearch(const CartesianCode& c1, const CartesianCode& c2, std::size_t r, bool prune, StateMeter& meter)
      : field_(c1.field()), n_(static_cast<std::size_t>(c1.length())), r_(r), prune_(prune), meter_(meter) {
    auto words = all_codewords(field_, c1.generator(), n_, meter_);
    buckets_.assign(n_, {});
    for (auto& w : words) {
      auto lead = std::find_if(w.begin(), w.end(), [](FieldElement x) { return !x.is_zero(); });
      if (lead == w.end() || lead->value != 1) continue;
      const auto idx = static_cast<std::uint32_t>(masks_.size());
      masks_.push_back(support_mask(w));
      const Vector residue = c2.echelon().reduce(w);
      for (FieldElement x : residue) residues_.push_back(x.value);
      buckets_[static_cast<std::size_t>(lead - w.begin())].push_back(idx);
      words_.push_back(std::move(w));
    }
    for (auto& bucket : buckets_) {
      std::stable_sort(bucket.begin(), bucket.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::popcount(masks_[a]) < std::popcount(masks_[b]);
      });
    }
    echelon_.assign(r_ * n_, 0);
    pivots_.assign(r_, 0);
    chosen_.assign(r_, 0);
    best_ = n_ + 1;
  }

  void run() { dfs(0, -1, 0, true); }

  bool found() const noexcept { return best_ <= n_; }
  std::size_t best() const noexcept { return best_; }
  std::vector<Vector> witness() const {
    std::vector<Vector> out;
    for (std::uint32_t idx : best_rows_) out.push_back(words_[idx]);
    return out;
  }

 private:
  // Reduces the residue of word idx against rows 0..depth-1 and stores it as
  // row `depth`; false if it is dependent on them.
  bool insert_residue(std::size_t depth, std::uint32_t idx) {
    std::uint16_t* row = &echelon_[depth * n_];
    std::copy_n(&residues_[static_cast<std::size_t>(idx) * n_], n_, row);
    for (std::size_t j = 0; j < depth; ++j) {
      const FieldElement c{row[pivots_[j]]};
      if (c.is_zero()) continue;
      const std::uint16_t* other = &echelon_[j * n_];
      for (std::size_t t = 0; t < n_; ++t) {
        if (other[t] != 0) {
          row[t] = field_.sub(FieldElement{row[t]}, field_.mul(c, FieldElement{other[t]})).value;
        }
      }
    }
    std::size_t pivot = 0;
    while (pivot < n_ && row[pivot] == 0) ++pivot;
    if (pivot == n_) return false;
    const FieldElement scale = field_.inv(FieldElement{row[pivot]});
    for (std::size_t t = 0; t < n_; ++t) row[t] = field_.mul(FieldElement{row[t]}, scale).value;
    pivots_[depth] = pivot;
    return true;
  }

  void dfs(std::size_t depth, long last_pivot, std::uint64_t support, bool valid) {
    if (depth == r_) {
      const auto size = static_cast<std::size_t>(std::popcount(support));
      if (valid && size < best_) {
        best_ = size;
        best_rows_.assign(chosen_.begin(), chosen_.end());
      }
      return;
    }
    const std::size_t remaining = r_ - depth;
    for (std::size_t p = static_cast<std::size_t>(last_pivot + 1); p + remaining <= n_; ++p) {
      if ((support >> p) & 1u) continue;  // earlier rows must vanish on this pivot
      for (std::uint32_t idx : buckets_[p]) {
        meter_.tick();
        const std::uint64_t mask = masks_[idx];
        if (prune_) {
          // every later row contributes its own fresh pivot
          if (static_cast<std::size_t>(std::popcount(mask)) + remaining - 1 >= best_) break;
          if (static_cast<std::size_t>(std::popcount(support | mask)) + remaining - 1 >= best_) continue;
        }
        const bool ok = valid && insert_residue(depth, idx);
        if (prune_ && !ok) continue;
        chosen_[depth] = idx;
        dfs(depth + 1, static_cast<long>(p), support | mask, ok);
      }
    }
  }

  Field field_;
  std::size_t n_;
  std::size_t r_;
  bool prune_;
  StateMeter& meter_;

  std::vector<Vector> words_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint16_t> residues_;
  std::vector<std::vector<std::uint32_t>> buckets_;

  std::vector<std::uint16_t> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> chosen_;
  std::size_t best_ = 0;
  std::vector<std::uint32_t> best_rows_;
};

// D = {u + lambda(u) : u in U} with U an r-subspace of a complement W of C2
// (in reduced echelon form over W's basis) and lambda any linear map U -> C2,
// fixed by the images of U's echelon rows. Every valid D arises exactly once.
class GraphSearch {
 public:
  GraphSearch(const CartesianCode& c1, const CartesianCode& c2, std::size_t r, bool prune, StateMeter& meter)
      : field_(c1.field()), n_(static_cast<std::size_t>(c1.length())), r_(r), prune_(prune), meter_(meter) {
    EchelonBasis extended = c2.echelon();
    for (const auto& row : c1.generator()) {
      if (extended.insert(row)) complement_.push_back(row);
    }
    c2_words_ = all_codewords(field_, c2.generator(), n_, meter_);
    rows_.assign(r_, Vector(n_, field_.zero()));
    best_ = n_ + 1;
  }

  void run() {
    std::vector<std::size_t> pivots;
    choose_pivots(pivots, 0);
  }

  bool found() const noexcept { return best_ <= n_; }
  std::size_t best() const noexcept { return best_; }
  const std::vector<Vector>& witness() const noexcept { return best_rows_; }

 private:
  void choose_pivots(std::vector<std::size_t>& pivots, std::size_t from) {
    if (pivots.size() == r_) {
      pivots_ = pivots;
      dfs(0, 0);
      return;
    }
    const std::size_t ell = complement_.size();
    for (std::size_t c = from; c + (r_ - pivots.size()) <= ell; ++c) {
      pivots.push_back(c);
      choose_pivots(pivots, c + 1);
      pivots.pop_back();
    }
  }

  void dfs(std::size_t depth, std::uint64_t support) {
    if (depth == r_) {
      const auto size = static_cast<std::size_t>(std::popcount(support));
      if (size < best_) {
        best_ = size;
        best_rows_ = rows_;
      }
      return;
    }
    const std::size_t ell = complement_.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = pivots_[depth] + 1; c < ell; ++c) {
      if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_cols.push_back(c);
    }
    const std::uint64_t q = field_.order();
    const std::uint64_t assignments = checked_power(q, free_cols.size(), std::uint64_t{1} << 40);
    meter_.reserve(assignments);
    std::vector<std::uint32_t> digits(free_cols.size(), 0);
    Vector u(n_);
    for (std::uint64_t a = 0; a < assignments; ++a) {
      std::uint64_t rest = a;
      for (std::size_t j = free_cols.size(); j-- > 0;) {
        digits[j] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      u = complement_[pivots_[depth]];
      for (std::size_t j = 0; j < free_cols.size(); ++j) {
        if (digits[j] == 0) continue;
        const FieldElement c{static_cast<std::uint16_t>(digits[j])};
        const Vector& w = complement_[free_cols[j]];
        for (std::size_t t = 0; t < n_; ++t) u[t] = field_.add(u[t], field_.mul(c, w[t]));
      }
      for (const auto& image : c2_words_) {
        meter_.tick();
        Vector& row = rows_[depth];
        for (std::size_t t = 0; t < n_; ++t) row[t] = field_.add(u[t], image[t]);
        const std::uint64_t next = support | support_mask(row);
        if (prune_ && static_cast<std::size_t>(std::popcount(next)) >= best_) continue;
        dfs(depth + 1, next);
      }
    }
  }

  Field field_;
  std::size_t n_;
  std::size_t r_;
  bool prune_;
  StateMeter& meter_;

  std::vector<Vector> complement_;
  std::vector<Vector> c2_words_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> rows_;
  std::size_t best_ = 0;
  std::vector<Vector> best_rows_;
};

}  // namespace

std::size_t shortened_dimension(const Field& field, const std::vector<Vector>& generator,
                                std::uint64_t window_mask) {
  if (generator.empty()) return 0;
  const std::size_t n = generator.front().size();
  std::vector<Vector> outside;
  outside.reserve(generator.size());
  for (const auto& row : generator) {
    Vector restricted;
    for (std::size_t t = 0; t < n; ++t) {
      if (!((window_mask >> t) & 1u)) restricted.push_back(row[t]);
    }
    outside.push_back(std::move(restricted));
  }
  if (outside.front().empty()) return generator.size();
  return generator.size() - rank_of(field, outside);
}

OracleResult oracle_rghw_support(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                                 const OracleBudget& budget, SupportSearchOptions options) {
  check_nesting(c1, c2, r);
  if (c1.length() > 64) fail(ErrorCode::InvalidArgument, "support oracle handles n <= 64 only");
  StateMeter meter(budget);
  OracleResult result;
  if (options.enumeration == SubspaceEnumeration::coordinate_echelon) {
    EchelonSearch search(c1, c2, static_cast<std::size_t>(r), options.prune, meter);
    search.run();
    if (!search.found()) fail(ErrorCode::InvalidNesting, "no admissible subspace found");
    result.value = search.best();
    result.witness_vectors = search.witness();
    result.method = OracleMethod::subspace_echelon;
  } else {
    GraphSearch search(c1, c2, static_cast<std::size_t>(r), options.prune, meter);
    search.run();
    if (!search.found()) fail(ErrorCode::InvalidNesting, "no admissible subspace found");
    result.value = search.best();
    result.witness_vectors = search.witness();
    result.method = OracleMethod::subspace_graph;
  }
  result.max_zeros = c1.length() - result.value;
  result.states_explored = meter.states();
  return result;
}

OracleResult oracle_rghw_window(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                                const OracleBudget& budget) {
  check_nesting(c1, c2, r);
  const std::uint64_t n = c1.length();
  if (n > 40) fail(ErrorCode::InvalidArgument, "window oracle handles n <= 40 only");
  StateMeter meter(budget);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  meter.reserve(subsets);

  std::uint64_t best_mask = 0;
  std::size_t best = static_cast<std::size_t>(n) + 1;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    meter.tick();
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    const std::size_t gap = shortened_dimension(c1.field(), c1.generator(), mask) -
                            shortened_dimension(c2.field(), c2.generator(), mask);
    if (gap == r) {
      best = size;
      best_mask = mask;
    }
  }
  if (best > n) fail(ErrorCode::InvalidNesting, "no coordinate set reaches the requested gap");

  OracleResult result;
  result.value = best;
  result.max_zeros = n - best;
  for (std::size_t t = 0; t < n; ++t) {
    if ((best_mask >> t) & 1u) result.witness_positions.push_back(t);
  }
  result.states_explored = meter.states();
  result.method = OracleMethod::coordinate_windows;
  return result;
}

OracleResult oracle_max_zeros_families(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r,
                                       const OracleBudget& budget, bool prune) {
  const BoxShape& shape = grid.shape();
  const Field& field = grid.field();
  validate_band(shape, band);
  const std::uint64_t ell = band_size(shape, band);
  if (r < 1 || r > ell) {
    fail(ErrorCode::RankOutOfRange, "r = " + std::to_string(r) + " outside 1.." + std::to_string(ell));
  }
  const std::size_t n = static_cast<std::size_t>(shape.n());
  if (n > 64) fail(ErrorCode::InvalidArgument, "family oracle handles n <= 64 only");
  StateMeter meter(budget);

  std::vector<Vector> monomial_values(n);
  for (std::size_t code = 0; code < n; ++code) {
    monomial_values[code] =
        evaluate_on_grid(MultiPoly::monomial(shape, field, shape.decode(code), field.one()), grid);
  }
  const std::vector<std::uint64_t> band_codes = enumerate_band_codes(shape, band);
  const std::uint64_t q = field.order();

  struct Candidate {
    std::uint64_t zeros;  // mask of grid positions where the polynomial vanishes
    std::uint64_t assignment;
  };
  struct Level {
    std::uint64_t lead;
    std::vector<std::uint64_t> free_monomials;
    std::vector<Candidate> candidates;  // distinct zero masks, most zeros first
  };

  long best = -1;
  std::vector<std::uint64_t> best_leads;
  std::vector<std::vector<std::uint64_t>> best_free;
  std::vector<std::uint64_t> best_assignments;

  std::vector<std::size_t> subset;
  std::vector<Level> levels(static_cast<std::size_t>(r));
  std::vector<std::uint64_t> picks(static_cast<std::size_t>(r));

  auto build_levels = [&]() {
    std::set<std::uint64_t> leads;
    for (std::size_t idx : subset) leads.insert(band_codes[idx]);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      Level& level = levels[i];
      level.lead = band_codes[subset[i]];
      level.free_monomials.clear();
      for (std::uint64_t mu = 0; mu < n; ++mu) {
        if (glex_less(shape, mu, level.lead) && !leads.count(mu)) level.free_monomials.push_back(mu);
      }
      const std::uint64_t count = checked_power(q, level.free_monomials.size(), std::uint64_t{1} << 40);
      meter.reserve(count);
      std::unordered_map<std::uint64_t, std::uint64_t> first_by_mask;
      level.candidates.clear();
      Vector value(n);
      for (std::uint64_t a = 0; a < count; ++a) {
        meter.tick();
        value = monomial_values[level.lead];
        std::uint64_t rest = a;
        for (std::size_t j = level.free_monomials.size(); j-- > 0;) {
          const auto digit = static_cast<std::uint16_t>(rest % q);
          rest /= q;
          if (digit == 0) continue;
          const Vector& mv = monomial_values[level.free_monomials[j]];
          for (std::size_t t = 0; t < n; ++t) value[t] = field.add(value[t], field.mul(FieldElement{digit}, mv[t]));
        }
        std::uint64_t zeros = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (value[t].is_zero()) zeros |= std::uint64_t{1} << t;
        }
        if (first_by_mask.emplace(zeros, a).second) level.candidates.push_back({zeros, a});
      }
      std::stable_sort(level.candidates.begin(), level.candidates.end(), [](const Candidate& x, const Candidate& y) {
        return std::popcount(x.zeros) > std::popcount(y.zeros);
      });
    }
  };

  auto dfs = [&](auto&& self, std::size_t depth, std::uint64_t common) -> void {
    if (depth == levels.size()) {
      const long zeros = std::popcount(common);
      if (zeros > best) {
        best = zeros;
        best_leads.clear();
        best_free.clear();
        for (const auto& level : levels) {
          best_leads.push_back(level.lead);
          best_free.push_back(level.free_monomials);
        }
        best_assignments = picks;
      }
      return;
    }
    for (const Candidate& c : levels[depth].candidates) {
      meter.tick();
      if (prune && std::popcount(c.zeros) <= best) break;
      const std::uint64_t next = common & c.zeros;
      if (prune && std::popcount(next) <= best) continue;
      picks[depth] = c.assignment;
      self(self, depth + 1, next);
    }
  };

  auto choose = [&](auto&& self, std::size_t from) -> void {
    if (subset.size() == r) {
      build_levels();
      dfs(dfs, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
      return;
    }
    for (std::size_t idx = from; idx + (r - subset.size()) <= band_codes.size(); ++idx) {
      subset.push_back(idx);
      self(self, idx + 1);
      subset.pop_back();
    }
  };
  choose(choose, 0);

  OracleResult result;
  result.max_zeros = static_cast<std::uint64_t>(best);
  result.value = n - result.max_zeros;
  for (std::size_t i = 0; i < best_leads.size(); ++i) {
    MultiPoly f = MultiPoly::monomial(shape, field, shape.decode(best_leads[i]), field.one());
    std::uint64_t rest = best_assignments[i];
    for (std::size_t j = best_free[i].size(); j-- > 0;) {
      const auto digit = static_cast<std::uint16_t>(rest % q);
      rest /= q;
      f.add_term(best_free[i][j], FieldElement{digit});
    }
    result.witness_polys.push_back(std::move(f));
  }
  result.states_explored = meter.states();
  result.method = OracleMethod::polynomial_families;
  return result;
}

bool verify_support_witness(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                            const OracleResult& result) {
  const auto& rows = result.witness_vectors;
  if (rows.size() != r || result.value + result.max_zeros != c1.length()) return false;
  for (const auto& row : rows) {
    if (row.size() != c1.length() || !c1.contains(row)) return false;
  }
  if (rank_of(c1.field(), rows) != r) return false;
  EchelonBasis joint = c2.echelon();
  for (const auto& row : rows) {
    if (!joint.insert(row)) return false;  // D meets C2 or rows are dependent
  }
  return support_of_span(rows).size() == result.value;
}

bool verify_window_witness(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                           const OracleResult& result) {
  if (result.value + result.max_zeros != c1.length()) return false;
  std::uint64_t mask = 0;
  for (std::size_t t : result.witness_positions) {
    if (t >= c1.length()) return false;
    mask |= std::uint64_t{1} << t;
  }
  if (static_cast<std::uint64_t>(std::popcount(mask)) != result.value) return false;
  const std::size_t gap = shortened_dimension(c1.field(), c1.generator(), mask) -
                          shortened_dimension(c2.field(), c2.generator(), mask);
  return gap == r;
}

bool verify_family_witness(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r,
                           const OracleResult& result) {
  const auto& polys = result.witness_polys;
  if (polys.size() != r || result.value + result.max_zeros != grid.size()) return false;
  const BoxShape& shape = grid.shape();
  std::set<std::uint64_t> leads;
  std::vector<Vector> coefficient_rows;
  for (const auto& f : polys) {
    const auto lt = leading_term(f);
    if (!lt || !band.contains_degree(lt->exponent.degree())) return false;
    if (!leads.insert(shape.encode(lt->exponent)).second) return false;
    Vector row(shape.n(), grid.field().zero());
    for (const auto& [code, c] : f.terms()) row[code] = c;
    coefficient_rows.push_back(std::move(row));
  }
  if (rank_of(grid.field(), coefficient_rows) != r) return false;
  return grid.size() - common_zero_count(polys, grid) == result.value;
}

}  // namespace rghw

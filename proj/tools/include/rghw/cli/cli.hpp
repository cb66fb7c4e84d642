#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rghw/grid.hpp"
#include "rghw/oracle.hpp"
#include "rghw/weights.hpp"

namespace rghw::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
};

/// Test seam: when set, `formula` replaces the closed form wherever a formula
/// value is compared against an oracle.
struct Hooks {
  std::function<std::uint64_t(const WeightQuery&)> formula;
};

enum class OracleChoice { support, window, families };

std::string_view to_string(OracleChoice choice) noexcept;
/// Accepts "support", "window" and "families".
OracleChoice parse_oracle_choice(std::string_view name);

struct GridTuple {
  std::uint32_t q = 0;
  std::vector<int> sizes;
  int u1 = 0;
  int u2 = -1;
  std::uint64_t r = 1;
  SubsetPolicy policy = SubsetPolicy::first_elements;
};

enum class Status { ok, mismatch, skipped };

std::string_view to_string(Status status) noexcept;

struct GridEntry {
  GridTuple tuple;
  std::uint64_t formula = 0;
  std::optional<std::uint64_t> oracle;
  Status status = Status::skipped;
  std::uint64_t states_explored = 0;
  /// Rendered oracle witness, filled for mismatches.
  std::string witness;
};

/// All tuples with q in qs, a shape admissible for q (d_m <= q) and n <= max_n,
/// -1 <= u2 < u1 <= k and 1 <= r <= ell. Shapes are taken as given; unsorted
/// ones are normalized by the grid.
std::vector<GridTuple> enumerate_grid(const std::vector<std::uint32_t>& qs,
                                      const std::vector<std::vector<int>>& shapes, std::uint64_t max_n);

/// Formula against one oracle. BudgetExceeded turns into Status::skipped; a
/// witness that fails its independent re-check counts as a mismatch.
GridEntry check_tuple(const GridTuple& tuple, OracleChoice oracle, const OracleBudget& budget,
                      const Hooks& hooks = {});

/// Entry point behind the `rghw` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace rghw::cli

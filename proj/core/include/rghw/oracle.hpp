#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rghw/boxcomb.hpp"
#include "rghw/codes.hpp"
#include "rghw/grid.hpp"
#include "rghw/linalg.hpp"
#include "rghw/polynomials.hpp"

namespace rghw {

/// Caps on brute-force work. Hitting either cap raises BudgetExceeded; no
/// oracle ever returns a value from a partial enumeration.
struct OracleBudget {
  std::uint64_t max_states = 100'000'000;
  std::uint64_t time_cap_seconds = 300;

  /// Throws Error{InvalidArgument} unless both caps are positive.
  void validate() const;
};

enum class OracleMethod {
  subspace_echelon,     // r-subspaces of C1 by reduced echelon form in coordinates
  subspace_graph,       // graphs u + lambda(u) over subspaces of a complement of C2
  coordinate_windows,   // min |J| with dim (C1)_J - dim (C2)_J = r
  polynomial_families,  // max common zeros over reduced families with distinct LTs
};

std::string_view to_string(OracleMethod method) noexcept;

enum class SubspaceEnumeration { coordinate_echelon, complement_graph };

struct SupportSearchOptions {
  SubspaceEnumeration enumeration = SubspaceEnumeration::coordinate_echelon;
  /// Branch-and-bound on partial supports. Off gives the exhaustive
  /// reference enumeration.
  bool prune = true;
};

struct OracleResult {
  /// M_r as measured by this oracle.
  std::uint64_t value = 0;
  /// n - value.
  std::uint64_t max_zeros = 0;
  /// Basis of a minimizing D (support oracles).
  std::vector<Vector> witness_vectors;
  /// A maximizing family (family oracle).
  std::vector<MultiPoly> witness_polys;
  /// A minimizing coordinate set J, 0-based (window oracle).
  std::vector<std::size_t> witness_positions;
  std::uint64_t states_explored = 0;
  OracleMethod method = OracleMethod::subspace_echelon;
};

/// min |supp(D)| over r-dimensional D inside C1 with D and C2 meeting only
/// in 0. Requires C2 inside C1 on the same grid and n <= 64.
/// Throws Error{InvalidNesting}, Error{RankOutOfRange}, BudgetExceeded.
OracleResult oracle_rghw_support(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                                 const OracleBudget& budget = {}, SupportSearchOptions options = {});

/// min |J| over all 2^n coordinate sets J with dim (C1)_J - dim (C2)_J = r.
OracleResult oracle_rghw_window(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                                const OracleBudget& budget = {});

/// n - max |Z_A(f_1..f_r)| over families with distinct leading exponents
/// t_i in the band, each f_i monic in x^{t_i} with free coefficients on the
/// monomials glex-below t_i that are not other leading exponents.
OracleResult oracle_max_zeros_families(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r,
                                       const OracleBudget& budget = {}, bool prune = true);

/// Independent re-checks of the witnesses carried by each result.
bool verify_support_witness(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                            const OracleResult& result);
bool verify_window_witness(const CartesianCode& c1, const CartesianCode& c2, std::uint64_t r,
                           const OracleResult& result);
bool verify_family_witness(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r,
                           const OracleResult& result);

/// dim (C)_J for the code spanned by `generator`, J given as a 0-based
/// position mask. Exposed for tests.
std::size_t shortened_dimension(const Field& field, const std::vector<Vector>& generator,
                                std::uint64_t window_mask);

}  // namespace rghw

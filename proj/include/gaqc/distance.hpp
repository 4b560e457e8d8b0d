#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "gaqc/linear_code.hpp"

namespace gaqc {

/// Limits shared by the distance engines.
struct Budget {
  /// Largest dimension enumerated codeword by codeword (2^k_max words).
  unsigned k_max = 26;
  /// Largest meet-in-the-middle volume a column search may commit to.
  double column_volume = 1e10;
  /// Column-search table entries held in memory at once (16 bytes each); more means fewer passes.
  std::size_t table_entries = std::size_t{1} << 25;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget with_seconds(double seconds);
  bool expired() const;
  /// Throws BudgetError once the deadline has passed.
  void check_deadline() const;
};

/// Weight histogram (index = weight) of all 2^k codewords; requires k <= budget.k_max.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c, const Budget& budget = {});

/**
 * Exact minimum distance when affordable. Strategy: Gray-code enumeration when k <= k_max;
 * otherwise a column search on the parity-check matrix starting at the code's design bound, and
 * MacWilliams transform of the dual's enumeration when n - k <= k_max. When nothing completes
 * the result is an interval combining the design bound with the weights ruled out so far.
 * Throws UsageError for the zero code.
 */
DistanceCert min_distance_exact(const LinearCode& c, const Budget& budget = {});

/// Returns true to accept a dependency (column indices ascending).
using DependencyFilter = std::function<bool(const std::vector<std::size_t>&)>;

/**
 * Finds column dependencies of a fixed weight by meet-in-the-middle: every w-subset is split
 * uniquely as X (the ceil(w/2) smallest indices) and Y (the rest), right halves are tabulated by
 * column sum and left halves are streamed against the table. Large tables are processed in
 * hash-partitioned passes. Columns wider than 64 bits are compared through a random linear
 * projection and confirmed exactly.
 */
class ColumnSearch {
 public:
  ColumnSearch(const MatrixF2& par, const Budget& budget);

  std::size_t columns() const noexcept { return n_; }
  /// First accepted dependency of exactly w columns in the (deterministic) search order, or nullopt.
  std::optional<std::vector<std::size_t>> find(std::size_t w, const DependencyFilter& accept = {});

  /// Subsets visited by find(w) on n columns: passes * C(n, ceil(w/2)) + C(n, floor(w/2)).
  static double volume(std::size_t n, std::size_t w, std::size_t table_entries = std::size_t{1} << 25);

 private:
  bool is_dependency(const std::vector<std::size_t>& idx) const;

  std::size_t n_;
  std::size_t rows_;
  bool exact_;
  std::vector<std::uint64_t> col_;           // projected (or exact, rows <= 64) column values
  std::vector<std::vector<word_t>> full_;    // exact columns, only when projected
  Budget budget_;
};

/**
 * Smallest w in [w_min, w_max] such that some w columns of `par` sum to zero (and the filter
 * accepts them); exact cert with the witness when found, else [w_max + 1, n]. The total
 * volume is checked against budget.column_volume before any work starts (BudgetError).
 */
struct SearchResult {
  DistanceCert cert;
  std::vector<std::size_t> witness;
};
SearchResult low_weight_search(const MatrixF2& par, std::size_t w_max, const Budget& budget = {},
                               std::size_t w_min = 1, const DependencyFilter& accept = {});

struct RelativeWeight {
  std::size_t relative = 0;     ///< min weight of C1 outside Csub
  DistanceCert full;            ///< exact d(C1), found on the way
  CertMethod method = CertMethod::coset_enumeration;
  BitVector witness;            ///< a codeword of C1 \ Csub of that weight
};

/**
 * wt(C1 \ Csub). Coset enumeration when k1 <= k_max, else a column search over par(C1)
 * starting at C1's design bound and skipping dependencies inside Csub. Throws UsageError unless
 * Csub is a proper subcode of C1, BudgetError when neither path fits the budget.
 */
RelativeWeight relative_min_weight(const LinearCode& c1, const LinearCode& csub, const Budget& budget = {});

}  // namespace gaqc

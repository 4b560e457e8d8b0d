#pragma once

#include <cstdint>
#include <vector>

#include "gaqc/grs.hpp"

namespace gaqc {

/// A_r(a, y): binary c with sum_j c_j a_j^i y_j = 0 for i = 0..r-1.
struct AlternantSpec {
  FieldPtr field;
  std::vector<gf_t> a;
  std::vector<gf_t> y;
  std::size_t r;

  /// Throws UsageError on repeated locators, zero multipliers or r outside 1..n-1.
  void validate() const;
};

/// r x n extension-field parity matrix H_{RS(n, r+1)} diag(y) (for full-group locators).
MatrixExt alternant_parity(const AlternantSpec& spec);
/// Binary kernel of the expansion of alternant_parity; design bound d >= r + 1.
LinearCode alternant_code(const AlternantSpec& spec);

struct SampledY {
  std::vector<gf_t> y;
  std::uint64_t attempts;
};

/**
 * An all-nonzero codeword of RS(n, delta): y_j = alpha^j f(alpha^j) for a uniformly random f
 * of degree < n - delta + 1, redrawn until no coordinate vanishes. Deterministic in `seed`.
 * Throws SearchFailure after `retry_limit` draws.
 */
SampledY sample_sub_alternant_y(const FieldPtr& field, unsigned delta, std::uint64_t seed,
                                std::uint64_t retry_limit = 100000);

/// Binary primitive Alternant code whose multiplier vector lies in RS(n, delta).
class SubAlternantSpec {
 public:
  /// Full-group locators; throws UsageError unless H_RS(n, delta) y^T = 0, all y_j != 0, 1 <= r < n.
  SubAlternantSpec(FieldPtr field, unsigned delta, std::vector<gf_t> y, std::size_t r);
  static SubAlternantSpec sampled(FieldPtr field, unsigned delta, std::size_t r, std::uint64_t seed);

  const AlternantSpec& alternant() const noexcept { return spec_; }
  unsigned delta() const noexcept { return delta_; }
  std::size_t r() const noexcept { return spec_.r; }
  /// Draws used by `sampled`, 0 for an explicit y.
  std::uint64_t attempts() const noexcept { return attempts_; }
  /// r < delta: the all-ones word is then a codeword.
  bool all_ones_guaranteed() const noexcept { return spec_.r < delta_; }
  /// delta/2 < r < min(delta, n/2)
  bool in_asymptotic_regime() const noexcept;

 private:
  AlternantSpec spec_;
  unsigned delta_;
  std::uint64_t attempts_ = 0;
};

LinearCode sub_alternant_code(const SubAlternantSpec& spec);

}  // namespace gaqc

#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "gaqc/linear_code.hpp"
#include "gaqc/matrix.hpp"

namespace gaqc {

/// Reed-Solomon code of length n = 2^m - 1 with design distance delta.
struct RsSpec {
  FieldPtr field;
  unsigned delta;

  std::size_t n() const { return field->group_order(); }
  /// n - delta + 1
  std::size_t k() const { return n() - delta + 1; }
};

/// alpha^0, alpha^1, ..., alpha^{n-1}
std::vector<gf_t> full_group_locators(const Field& f);

/// (delta - 1) x n matrix with entry (i, j) = alpha^{ij}. Throws UsageError unless 2 <= delta <= n - 1.
MatrixExt rs_parity_matrix(const RsSpec& spec);

/**
 * GRS_k(a, v) = {(v_1 F(a_1), ..., v_n F(a_n)) : deg F < k}. The dual multipliers
 * y_i = 1 / (v_i prod_{j != i} (a_i - a_j)) are computed on first use and shared by copies.
 */
class GrsSpec {
 public:
  /// Throws UsageError for repeated locators, zero multipliers or k outside 1..n-1.
  GrsSpec(FieldPtr field, std::vector<gf_t> a, std::vector<gf_t> v, std::size_t k);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<gf_t>& a() const noexcept { return a_; }
  const std::vector<gf_t>& v() const noexcept { return v_; }
  std::size_t n() const noexcept { return a_.size(); }
  std::size_t k() const noexcept { return k_; }
  const std::vector<gf_t>& y() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<gf_t> y;
  };

  FieldPtr field_;
  std::vector<gf_t> a_;
  std::vector<gf_t> v_;
  std::size_t k_;
  std::shared_ptr<Cache> cache_;
};

/// k x n, row r = (v_1 a_1^r, ..., v_n a_n^r).
MatrixExt grs_generator(const GrsSpec& spec);
/// (a, y, n - k)
GrsSpec grs_dual(const GrsSpec& spec);
/// (n - k) x n, entry (i, j) = a_j^i y_j.
MatrixExt grs_parity_matrix(const GrsSpec& spec);
/// RS(n, delta) as a GRS code: full-group locators, v_j = alpha^j, k = n - delta + 1.
GrsSpec rs_as_grs(const RsSpec& spec);

/// Binary image of GRS_k(a, v) under the symbolwise expansion in `basis`: [m n, m k].
LinearCode expanded_grs_code(const GrsSpec& spec, const Basis& basis);

}  // namespace gaqc

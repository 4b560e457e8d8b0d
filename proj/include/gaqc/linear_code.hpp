#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaqc/matrix.hpp"

namespace gaqc {

enum class CertStatus { exact, interval };
enum class CertMethod { trivial, enumeration, column_search, design_bound, coset_enumeration };

std::string to_string(CertStatus s);
std::string to_string(CertMethod m);

/// How much is known about a minimum distance: lower <= d <= upper.
struct DistanceCert {
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  std::size_t lower = 1;
  std::size_t upper = kUnbounded;  ///< clamped to n once attached to a code
  CertStatus status = CertStatus::interval;
  CertMethod method = CertMethod::trivial;

  static DistanceCert exact(std::size_t d, CertMethod how) { return {d, d, CertStatus::exact, how}; }
  static DistanceCert bounds(std::size_t lo, std::size_t hi, CertMethod how);
  /// [1, n]
  static DistanceCert trivial(std::size_t n) { return bounds(1, n, CertMethod::trivial); }

  bool is_exact() const noexcept { return status == CertStatus::exact; }
  /// Tightest combination of two valid certificates for the same distance; a disagreement between
  /// exact values (or disjoint intervals) throws InternalError.
  DistanceCert intersect(const DistanceCert& other) const;
};

/**
 * Binary linear code [n, k]. The generator is kept in reduced row-echelon form, the parity-check
 * matrix spans its null space, and gen * par^T = 0 is asserted at construction. `bound()` holds
 * what the construction itself proves about the minimum distance (design bounds).
 */
class LinearCode {
 public:
  static LinearCode from_generator(const MatrixF2& gen, std::string label, DistanceCert bound = {});
  static LinearCode from_parity(const MatrixF2& par, std::string label, DistanceCert bound = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return gen_.rows(); }
  const MatrixF2& generator() const noexcept { return gen_; }
  const MatrixF2& parity() const noexcept { return par_; }
  const std::string& label() const noexcept { return label_; }
  const DistanceCert& bound() const noexcept { return bound_; }

  bool contains(const BitVector& v) const;
  bool contains(std::span<const word_t> words) const;
  LinearCode with_bound(const DistanceCert& d) const;
  LinearCode relabeled(std::string label) const;
  /// Same codeword set.
  bool operator==(const LinearCode& o) const;

 private:
  LinearCode(MatrixF2 gen, MatrixF2 par, std::string label, DistanceCert bound);

  std::size_t n_ = 0;
  MatrixF2 gen_;
  MatrixF2 par_;
  std::string label_;
  DistanceCert bound_;
};

LinearCode dual(const LinearCode& c);
/// Appends an overall parity coordinate: [n+1, k].
LinearCode extend(const LinearCode& c);
/// Deletes coordinate pos.
LinearCode puncture(const LinearCode& c, std::size_t pos);
/// Keeps codewords vanishing at pos, then deletes the coordinate.
LinearCode shorten(const LinearCode& c, std::size_t pos);

struct Expurgation {
  LinearCode code;
  bool changed;  ///< false when c had no odd-weight codeword and was returned unchanged
};
/// Even-weight subcode.
Expurgation expurgate(const LinearCode& c);
/// True iff every codeword of `sub` lies in `super`.
bool is_subcode(const LinearCode& sub, const LinearCode& super);

/// The [n, 1, n] repetition code.
LinearCode repetition_code(std::size_t n);
/// The [n, n-1, 2] code whose parity check is the all-ones row.
LinearCode even_weight_code(std::size_t n);
/// The [2^r - 1, 2^r - 1 - r, 3] Hamming code; column j of H is the binary expansion of j+1.
LinearCode hamming_code(unsigned r);

using BigInt = boost::multiprecision::cpp_int;

/// Number of weight-w codewords of any [n, n-d+1, d] MDS code over GF(q).
BigInt mds_weight_enumerator(unsigned n, unsigned d, unsigned long long q, unsigned w);

}  // namespace gaqc

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gaqc {

/// Raw element of GF(2^m): bit i is the coefficient of x^i in the residue class.
using gf_t = std::uint16_t;

/**
 * GF(2^m) for 2 <= m <= 12, represented modulo a fixed irreducible polynomial with a
 * designated primitive element. Immutable; share through FieldPtr.
 *
 * All arithmetic runs through exp/log tables taken with respect to alpha(), so
 * exp(i) = alpha^i and log(exp(i)) = i.
 */
class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 12;

  /// Field with the built-in modulus for m and the smallest primitive element.
  explicit Field(int m);
  /// Field with an explicit modulus (bit i = coefficient of x^i, bit m set). Throws UsageError
  /// when the modulus is not irreducible of degree m or alpha is given and is not primitive.
  Field(int m, std::uint32_t modulus, std::optional<gf_t> alpha = std::nullopt);

  int m() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  gf_t alpha() const noexcept { return alpha_; }
  /// q = 2^m
  std::uint32_t size() const noexcept { return 1u << m_; }
  /// 2^m - 1
  std::uint32_t group_order() const noexcept { return (1u << m_) - 1; }

  static gf_t add(gf_t a, gf_t b) noexcept { return a ^ b; }
  gf_t mul(gf_t a, gf_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  gf_t sqr(gf_t a) const noexcept { return mul(a, a); }
  gf_t inv(gf_t a) const;
  gf_t div(gf_t a, gf_t b) const;
  gf_t pow(gf_t a, long long e) const;
  /// alpha^e for any integer e.
  gf_t exp(long long e) const noexcept;
  /// Discrete log base alpha; a must be nonzero.
  unsigned log(gf_t a) const;
  int trace(gf_t a) const noexcept { return trace_[a]; }
  unsigned element_order(gf_t a) const;
  bool is_primitive(gf_t a) const;
  bool contains(gf_t a) const noexcept { return a < size(); }

  /// Carry-less multiply-and-reduce; independent of the log tables.
  gf_t mul_slow(gf_t a, gf_t b) const noexcept;

  bool operator==(const Field& other) const noexcept {
    return m_ == other.m_ && modulus_ == other.modulus_ && alpha_ == other.alpha_;
  }

  /// {"m":6,"modulus":"0x43","alpha":"0x02"}
  std::string to_json() const;

 private:
  void build_tables();

  int m_;
  std::uint32_t modulus_;
  gf_t alpha_;
  std::vector<gf_t> exp_;        // length 2*(q-1), doubled to skip a modular reduction in mul
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int m);
FieldPtr make_field(int m, std::uint32_t modulus, std::optional<gf_t> alpha = std::nullopt);
/// Parses the serialization produced by Field::to_json.
FieldPtr field_from_json(const std::string& text);

/// Lexicographically smallest primitive polynomial of degree m (built-in table, m = 2..12).
std::uint32_t default_modulus(int m);
bool is_irreducible_gf2(std::uint32_t poly, int m);
/// Every primitive polynomial of degree m, ascending.
std::vector<std::uint32_t> primitive_moduli(int m);

/// Value type tying a raw element to its field; arithmetic between different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(FieldPtr field, gf_t bits);

  const FieldPtr& field() const noexcept { return field_; }
  gf_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const { return *this + o; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(long long e) const;
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  gf_t bits_;
};

FieldElement gf_mul(const FieldElement& a, const FieldElement& b);
FieldElement gf_inv(const FieldElement& a);
int trace(const FieldElement& a);
unsigned element_order(const FieldElement& a);
bool is_primitive(const FieldElement& a);

/**
 * A GF(2)-basis of GF(2^m) together with its trace-dual basis. coordinates(x) returns the
 * bit mask (Tr(x d_1), ..., Tr(x d_m)), so x = sum_i coord_i * b_i.
 */
class Basis {
 public:
  /// Throws UsageError unless `elements` are m linearly independent field elements.
  Basis(FieldPtr field, std::vector<gf_t> elements);

  /// {1, x, ..., x^{m-1}}: coordinates are the raw bits.
  static Basis polynomial(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const gf_t> elements() const noexcept { return elements_; }
  std::span<const gf_t> dual() const noexcept { return dual_; }
  bool is_self_dual() const noexcept { return elements_ == dual_; }
  std::uint32_t coordinates(gf_t x) const noexcept { return coords_[x]; }
  gf_t combine(std::uint32_t coords) const noexcept;

 private:
  FieldPtr field_;
  std::vector<gf_t> elements_;
  std::vector<gf_t> dual_;
  std::vector<std::uint32_t> coords_;
};

/// Deterministic depth-first search (ascending element order) for {b_i} with Tr(b_i b_j) = [i == j].
std::vector<gf_t> find_self_dual_basis(const Field& field);

}  // namespace gaqc

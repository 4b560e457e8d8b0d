#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaqc/field.hpp"

namespace gaqc {

/// Polynomial over GF(2^m), coefficients lowest degree first with no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<gf_t> coeffs);

  static Poly constant(FieldPtr field, gf_t c);
  /// z^k
  static Poly monomial(FieldPtr field, unsigned k, gf_t c = 1);
  /// z - root (= z + root in characteristic two)
  static Poly linear(FieldPtr field, gf_t root);
  /// prod (z - r) over the given roots
  static Poly from_roots(FieldPtr field, const std::vector<gf_t>& roots);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<gf_t>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  gf_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : gf_t{0}; }
  gf_t leading() const noexcept { return coeffs_.empty() ? gf_t{0} : coeffs_.back(); }

  gf_t eval(gf_t x) const noexcept;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator*(const Poly& o) const;
  Poly scaled(gf_t c) const;
  Poly pow(unsigned e) const;
  Poly derivative() const;
  Poly monic() const;
  /// (quotient, remainder); throws DomainError for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly mod(const Poly& divisor) const { return divmod(divisor).second; }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  void check_same(const Poly& o) const;

  FieldPtr field_;
  std::vector<gf_t> coeffs_;
};

Poly poly_gcd(Poly a, Poly b);
/// true iff f | g; throws DomainError when f is zero.
bool poly_divides(const Poly& f, const Poly& g);
/// Every root in GF(2^m), found by evaluating at all 2^m points; ascending by raw value.
std::vector<gf_t> poly_roots(const Poly& p);
bool is_squarefree(const Poly& p);

/**
 * Parses the CLI polynomial grammar: terms joined by '+' or '-' (identical in characteristic
 * two), factors joined by '*', atoms `z`, `z^K`, `a`, `a^K`, `0`, `1`, and parenthesised
 * expressions optionally raised to `^K`. `a` is the field's primitive element.
 * Example: "(z-a^9)^2*(z^9+1)". Throws UsageError on malformed input.
 */
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace gaqc

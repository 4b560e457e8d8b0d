#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaqc/distance.hpp"
#include "gaqc/linear_code.hpp"
#include "gaqc/poly.hpp"

namespace gaqc {

enum class LocatorMode { all, nonroots, nonzero_nonroots };
LocatorMode parse_locator_mode(const std::string& s);
std::string to_string(LocatorMode m);

/// Field elements in the order (0, alpha^0, alpha^1, ..., alpha^{q-2}), minus roots of G unless
/// mode is `all` (which throws UsageError if G has a root in the field).
std::vector<gf_t> default_locators(const Poly& g, LocatorMode mode);

struct GoppaSpec {
  Poly g;
  std::vector<gf_t> locators;

  /// Throws UsageError unless G is monic of degree >= 1 and the locators are distinct non-roots.
  GoppaSpec(Poly g, std::vector<gf_t> locators);
  GoppaSpec(Poly g, LocatorMode mode) : GoppaSpec(g, default_locators(g, mode)) {}

  const FieldPtr& field() const noexcept { return g.field(); }
  std::size_t n() const noexcept { return locators.size(); }
  std::size_t t() const noexcept { return static_cast<std::size_t>(g.degree()); }
};

/// deg(G) x n matrix with entry (j, i) = alpha_i^j / G(alpha_i).
MatrixExt goppa_parity(const GoppaSpec& spec);
/// Column i holds the coefficients of G(alpha_i)^{-1} (G(z) - G(alpha_i)) / (z - alpha_i).
MatrixExt goppa_parity_residue(const GoppaSpec& spec);

/// Binary kernel of the expanded Alternant-form parity matrix; design bound d >= deg(G) + 1.
LinearCode goppa_code(const GoppaSpec& spec);
/// Same code through the residue form.
LinearCode goppa_code_residue(const GoppaSpec& spec);

struct BoostResult {
  bool applied = false;
  LinearCode code;
  std::string diagnostic;
};
/**
 * For square-free G, checks Gamma(L, G) = Gamma(L, G^2) by construction and, when the two
 * agree, raises the bound to 2 deg(G) + 1. `code` must be goppa_code(spec).
 */
BoostResult squarefree_boost(const GoppaSpec& spec, const LinearCode& code);

struct NestingReport {
  bool applicable = false;  ///< F | G
  bool contained = false;   ///< Gamma(L, G) inside Gamma(L, F)
};
/// F | G implies Gamma(L, G) inside Gamma(L, F); a failed containment throws InternalError.
NestingReport nested_goppa(const GoppaSpec& spec_g, const Poly& f);

/// Sum over mu = 1..l-1 of 1 / (alpha^{mu t} + 1) with l = (2^m - 1) / t.
int bezzateev_S(const Field& field, unsigned t);

enum class BezzateevVariant { base, extended, punctured };
BezzateevVariant parse_bezzateev_variant(const std::string& s);
std::string to_string(BezzateevVariant v);

struct BezzateevSpec {
  FieldPtr field;
  unsigned t;
  gf_t a = 1;  ///< constant term A, a t-th power
  BezzateevVariant variant = BezzateevVariant::base;
};

struct BezzateevCode {
  int s;
  GoppaSpec goppa;     ///< Gamma(N, z^t + A), N = all non-roots including 0
  LinearCode base;     ///< goppa_code(goppa) with the boosted bound
  LinearCode code;     ///< after the variant's extension or puncture
  std::optional<std::size_t> punctured_at;
  bool boosted;
};

/**
 * S = 1: base is Gamma(N, G) (the all-ones word is asserted to be a codeword), extended and
 * punctured variants follow. S = 0: only the punctured variant exists; the coordinate of the
 * locator 0 is deleted, leaving the length 2^m - t - 1 code with an all-ones word.
 */
BezzateevCode bezzateev_code(const BezzateevSpec& spec);

/// n - m deg(G), possibly negative.
long long dimension_lower_bound(const GoppaSpec& spec);

struct Example44Realization {
  std::uint32_t modulus;
  gf_t alpha;
  /// Besides 0 (stages 1-2) or alpha^dropped (stage 3), the location set is every non-root.
  std::optional<unsigned> dropped_exponent;
  std::size_t n, k;
  DistanceCert d;
};
struct Example44Report {
  std::size_t candidates = 0;              ///< (modulus, alpha) pairs examined in stages 1-2
  std::vector<Example44Realization> all;   ///< stages 1-2: every candidate with its parameters
  std::vector<Example44Realization> hits;  ///< stages 1-2: those giving [55, 16, 19]
  bool swept_moduli = false;
  /// Stage 3, run only when stages 1-2 find nothing: L = non-roots minus one nonzero element.
  std::vector<Example44Realization> drop_one_hits;
};
/**
 * G = product of (z - alpha^e) for e in {9, 12, 30, 34, 42, 43, 50, 54}, L = nonzero non-roots,
 * for every primitive alpha of GF(2^6) under the default modulus (stage 1); with `sweep_moduli`
 * or when stage 1 yields nothing every other primitive degree-6 modulus too (stage 2). If still
 * nothing gives [55, 16, 19], stage 3 scans, under the default modulus, location sets made of
 * all non-roots except one nonzero element.
 */
Example44Report find_example_4_4(bool sweep_moduli, const Budget& budget = {});

}  // namespace gaqc

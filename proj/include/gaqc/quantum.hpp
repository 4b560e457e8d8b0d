#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaqc/alternant.hpp"
#include "gaqc/distance.hpp"
#include "gaqc/goppa.hpp"
#include "gaqc/grs.hpp"

namespace gaqc {

/// verified: both relative weights computed and equal to the classical distances; impure: one
/// computed relative weight exceeds its distance; assumed: some weight was out of budget.
enum class Purity { verified, assumed, unknown, impure };
std::string to_string(Purity p);

/// [[n, k, dz/dx]] from nested binary codes C2^perp inside C1.
struct AqcReport {
  std::size_t n = 0, k = 0, k1 = 0, k2 = 0;
  DistanceCert dz, dx;  ///< wt(C1 \ C2^perp), wt(C2 \ C1^perp)
  DistanceCert d1, d2;  ///< classical distances of C1, C2
  Purity pure = Purity::unknown;
  std::string c1, c2;   ///< labels of the classical codes behind dz and dx
  std::string dz_path, dx_path;
};

/**
 * Checks C2^perp inside C1 (UsageError naming the first generator of C2^perp outside C1),
 * sets k = k1 + k2 - n and, when `verify_purity`, computes both relative weights. A relative weight
 * that does not fit the budget falls back to [d(C).lower, n] with purity `assumed`.
 */
AqcReport css_construct(const LinearCode& c1, const LinearCode& c2, const Budget& budget = {}, bool verify_purity = true);

struct SubAlternantAqc {
  AqcReport report;
  SubAlternantSpec spec;
  LinearCode code;
};
/// dz from the sub-alternant code (as C1), dx from the [n, n-1, 2] even-weight code. Needs 1 < r < delta < n.
SubAlternantAqc sub_alternant_aqc(const FieldPtr& field, unsigned delta, std::size_t r, std::uint64_t seed,
                                  const Budget& budget = {});

struct BezzateevAqc {
  AqcReport report;
  int s;
  std::size_t goppa_dim;
  long long lower_bound;  ///< |N| - m t
  std::optional<std::size_t> punctured_at;
  bool boosted;
};
/// The variant's Goppa code (dz) paired with the even-weight code of the same length (dx).
BezzateevAqc bezzateev_aqc(const BezzateevSpec& spec, const Budget& budget = {});

struct ExpandedGrsPair {
  GrsSpec c1, c2;        ///< GRS_{K1}(a, v), GRS_{K2}(a, y) with y_i = alpha_i, v = all-ones
  LinearCode d1, d2;     ///< binary images in the self-dual basis
  bool contained;        ///< D2^perp inside D1
  bool dual_is_image;    ///< D2^perp equals the image of C2^perp
};
/// Builds and checks the pair; UsageError unless N <= 2 K1, K1 <= K2 <= N - 1, InternalError when containment fails.
ExpandedGrsPair expanded_grs_pair(const FieldPtr& field, std::size_t k1, std::size_t k2);

struct ExpandedGrsAqc {
  AqcReport binary;
  std::size_t big_n, ext_k, ext_dz, ext_dx;  ///< [[N, K1+K2-N, N-K1+1 / N-K2+1]] over GF(2^m)
  bool contained, dual_is_image;
};
ExpandedGrsAqc expanded_grs_aqc(const FieldPtr& field, std::size_t k1, std::size_t k2, const Budget& budget = {});

// ----------------------------------------------------------------------------------------------

/// -x log2 x - (1 - x) log2 (1 - x); UsageError outside [0, 1].
double binary_entropy(double x);
/// The x in [0, 1/2] with H(x) = y, by bisection to 1e-12; UsageError outside [0, 1].
double inverse_entropy(double y);

struct GvRow {
  double delta;
  double classical;     ///< 1 - H(delta)
  double quantum_sym;   ///< max(0, 1 - 2 H(delta))
  double aqc_dx_fixed;  ///< max(0, 1 - H(dx) - H(delta))
};
/// delta = 0, step, ..., 1/2. UsageError unless 0 < step <= 0.01 and 0 <= dx <= 1/2.
std::vector<GvRow> gv_curves(double step, double dx = 0.0);
std::string gv_csv(const std::vector<GvRow>& rows);

struct GvPoint {
  double delta_x, delta_z, rate;
};
/// 1 - H(dx) - H(dz) clamped at 0 on the grid [0, 1/2]^2.
std::vector<GvPoint> gv_surface(double step);
std::string gv_surface_csv(const std::vector<GvPoint>& pts);

}  // namespace gaqc

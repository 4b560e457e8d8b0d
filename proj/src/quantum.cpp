#include "gaqc/quantum.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gaqc/errors.hpp"

namespace gaqc {

std::string to_string(Purity p) {
  switch (p) {
    case Purity::verified: return "verified";
    case Purity::assumed: return "assumed";
    case Purity::unknown: return "unknown";
    case Purity::impure: return "impure";
  }
  return "?";
}

namespace {

struct Side {
  DistanceCert relative;
  DistanceCert classical;
  bool computed = false;
  std::string path;
};

// wt(c \ sub), or the fallback interval [d(c).lower, lightest generator outside sub].
Side relative_side(const LinearCode& c, const LinearCode& sub, const Budget& budget, bool verify) {
  Side s;
  if (verify) {
    try {
      const RelativeWeight rw = relative_min_weight(c, sub, budget);
      s.relative = DistanceCert::exact(rw.relative, rw.method);
      s.classical = rw.full;
      s.computed = true;
      s.path = to_string(rw.method) + " over " + c.label();
      return s;
    } catch (const BudgetError& e) {
      s.path = std::string("out of budget (") + e.what() + "); bounded by d(" + c.label() + ")";
    }
  } else {
    s.path = "not verified; bounded by d(" + c.label() + ")";
  }
  s.classical = min_distance_exact(c, budget);
  std::size_t upper = c.n();
  for (std::size_t r = 0; r < c.k(); ++r) {
    if (!sub.contains(c.generator().row(r))) upper = std::min(upper, c.generator().row_vector(r).weight());
  }
  s.relative = DistanceCert::bounds(s.classical.lower, std::max(upper, s.classical.lower), s.classical.method);
  return s;
}

}  // namespace

AqcReport css_construct(const LinearCode& c1, const LinearCode& c2, const Budget& budget, bool verify_purity) {
  if (c1.n() != c2.n()) throw UsageError("C1 and C2 have different lengths");
  const LinearCode c2perp = dual(c2);
  for (std::size_t r = 0; r < c2perp.k(); ++r) {
    if (!c1.contains(c2perp.generator().row(r))) {
      throw UsageError("C2^perp is not inside C1: generator " + std::to_string(r) + " of dual(" + c2.label() +
                       ") = " + c2perp.generator().row_vector(r).to_string() + " lies outside " + c1.label());
    }
  }
  const std::size_t n = c1.n();
  if (c1.k() + c2.k() == n) throw UsageError("k1 + k2 = n: the construction encodes no qubits");
  AqcReport rep;
  rep.n = n;
  rep.k1 = c1.k();
  rep.k2 = c2.k();
  rep.k = c1.k() + c2.k() - n;
  rep.c1 = c1.label();
  rep.c2 = c2.label();
  const Side z = relative_side(c1, c2perp, budget, verify_purity);
  const Side x = relative_side(c2, dual(c1), budget, verify_purity);
  rep.dz = z.relative;
  rep.dx = x.relative;
  rep.d1 = z.classical;
  rep.d2 = x.classical;
  rep.dz_path = z.path;
  rep.dx_path = x.path;
  if (!verify_purity) {
    rep.pure = Purity::unknown;
  } else if (z.computed && x.computed) {
    const bool pure = rep.dz.lower == rep.d1.lower && rep.dx.lower == rep.d2.lower;
    rep.pure = pure ? Purity::verified : Purity::impure;
  } else {
    rep.pure = Purity::assumed;
  }
  return rep;
}

SubAlternantAqc sub_alternant_aqc(const FieldPtr& field, unsigned delta, std::size_t r, std::uint64_t seed,
                                  const Budget& budget) {
  const std::size_t n = field->group_order();
  if (!(1 < r && r < delta && delta < n)) throw UsageError("sub-alternant AQC needs 1 < r < delta < n");
  SubAlternantSpec spec = SubAlternantSpec::sampled(field, delta, r, seed);
  LinearCode code = sub_alternant_code(spec);
  AqcReport rep = css_construct(code, even_weight_code(n), budget);
  return {std::move(rep), std::move(spec), std::move(code)};
}

BezzateevAqc bezzateev_aqc(const BezzateevSpec& spec, const Budget& budget) {
  const BezzateevCode bc = bezzateev_code(spec);
  AqcReport rep = css_construct(bc.code, even_weight_code(bc.code.n()), budget);
  if (rep.k + 1 != bc.code.k()) throw InternalError("z^t + A AQC lost more than one information bit");
  return {std::move(rep), bc.s, bc.code.k(), dimension_lower_bound(bc.goppa), bc.punctured_at, bc.boosted};
}

ExpandedGrsPair expanded_grs_pair(const FieldPtr& field, std::size_t k1, std::size_t k2) {
  const std::size_t big_n = field->group_order();
  if (2 * k1 < big_n || k1 > k2 || k2 + 1 > big_n) {
    throw UsageError("expanded GRS AQC needs N/2 <= K1 <= K2 <= N - 1 (N = " + std::to_string(big_n) + ")");
  }
  const std::vector<gf_t> a = full_group_locators(*field);
  const GrsSpec g1(field, a, std::vector<gf_t>(big_n, 1), k1);
  const GrsSpec g2(field, a, a, k2);
  const Basis basis(field, find_self_dual_basis(*field));
  LinearCode d1 = expanded_grs_code(g1, basis);
  LinearCode d2 = expanded_grs_code(g2, basis);
  const LinearCode d2perp = dual(d2);
  const bool contained = is_subcode(d2perp, d1);
  if (!contained) throw InternalError("D2^perp is not inside D1 for a self-dual basis expansion");
  const bool image = expanded_grs_code(grs_dual(g2), basis) == d2perp;
  return {g1, g2, std::move(d1), std::move(d2), contained, image};
}

ExpandedGrsAqc expanded_grs_aqc(const FieldPtr& field, std::size_t k1, std::size_t k2, const Budget& budget) {
  const ExpandedGrsPair pair = expanded_grs_pair(field, k1, k2);
  const std::size_t big_n = field->group_order();
  AqcReport rep = css_construct(pair.d1, pair.d2, budget);
  return {std::move(rep), big_n, k1 + k2 - big_n, big_n - k1 + 1, big_n - k2 + 1, pair.contained, pair.dual_is_image};
}

// ----------------------------------------------------------------------------------------------

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw UsageError("entropy argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double inverse_entropy(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw UsageError("inverse entropy argument outside [0, 1]");
  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<GvRow> gv_curves(double step, double dx) {
  if (!(step > 0.0 && step <= 0.01)) throw UsageError("GV step must satisfy 0 < step <= 0.01");
  if (!(dx >= 0.0 && dx <= 0.5)) throw UsageError("dx must lie in [0, 1/2]");
  const double hx = binary_entropy(dx);
  std::vector<GvRow> rows;
  const auto count = static_cast<std::size_t>(std::floor(0.5 / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    const double d = std::min(0.5, static_cast<double>(i) * step);
    const double h = binary_entropy(d);
    rows.push_back({d, 1 - h, std::max(0.0, 1 - 2 * h), std::max(0.0, 1 - hx - h)});
  }
  if (rows.back().delta < 0.5) rows.push_back({0.5, 0.0, 0.0, 0.0});
  return rows;
}

std::string gv_csv(const std::vector<GvRow>& rows) {
  std::ostringstream os;
  os << "delta,R_classical,R_quantum_sym,R_aqc_dx_fixed\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f,%.9f,%.9f,%.9f\n", r.delta, r.classical, r.quantum_sym, r.aqc_dx_fixed);
    os << buf;
  }
  return os.str();
}

std::vector<GvPoint> gv_surface(double step) {
  if (!(step > 0.0 && step <= 0.01)) throw UsageError("GV step must satisfy 0 < step <= 0.01");
  std::vector<GvPoint> pts;
  const auto count = static_cast<std::size_t>(std::floor(0.5 / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    const double x = std::min(0.5, static_cast<double>(i) * step);
    for (std::size_t j = 0; j <= count; ++j) {
      const double z = std::min(0.5, static_cast<double>(j) * step);
      pts.push_back({x, z, std::max(0.0, 1 - binary_entropy(x) - binary_entropy(z))});
    }
  }
  return pts;
}

std::string gv_surface_csv(const std::vector<GvPoint>& pts) {
  std::ostringstream os;
  os << "delta_x,delta_z,R_Q\n";
  char buf[96];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.9f\n", p.delta_x, p.delta_z, p.rate);
    os << buf;
  }
  return os.str();
}

}  // namespace gaqc

#include "doctest.h"

#include <cmath>
#include <cstring>

#include "gaqc/errors.hpp"
#include "gaqc/quantum.hpp"

using namespace gaqc;

namespace {

LinearCode code_of(std::initializer_list<const char*> rows) {
  MatrixF2 g(0, std::strlen(*rows.begin()));
  for (const char* r : rows) {
    BitVector v(g.cols());
    for (std::size_t j = 0; r[j]; ++j) {
      if (r[j] == '1') v.set(j);
    }
    g.append_row(v);
  }
  return LinearCode::from_generator(g, "rows");
}

}  // namespace

TEST_CASE("CSS from the Hamming code") {
  const LinearCode h = hamming_code(3);
  const AqcReport r = css_construct(h, h);
  CHECK(r.n == 7);
  CHECK(r.k == 1);
  CHECK(r.dz.lower == 3);
  CHECK(r.dz.is_exact());
  CHECK(r.dx.lower == 3);
  CHECK(r.pure == Purity::verified);
  CHECK(r.d1.lower == 3);
}

TEST_CASE("CSS input contracts") {
  const LinearCode h = hamming_code(3);
  CHECK_THROWS_AS(css_construct(dual(h), dual(h)), UsageError);
  CHECK_THROWS_AS(css_construct(h, hamming_code(4)), UsageError);
  // C2^perp = C1 leaves no logical qubits.
  CHECK_THROWS_AS(css_construct(h, dual(h)), UsageError);
  try {
    css_construct(dual(h), dual(h));
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("generator 0") != std::string::npos);
  }
}

TEST_CASE("impure and unverified reports") {
  const LinearCode c1 = code_of({"1100", "0111"});
  const LinearCode c2 = dual(code_of({"1100"}));
  const AqcReport r = css_construct(c1, c2);
  CHECK(r.k == 1);
  CHECK(r.d1.lower == 2);
  CHECK(r.dz.lower == 3);
  CHECK(r.pure == Purity::impure);
  CHECK(css_construct(c1, c2, {}, false).pure == Purity::unknown);

  Budget none;
  none.k_max = 0;
  none.column_volume = 0;
  const LinearCode h = hamming_code(4);
  const AqcReport a = css_construct(h, h, none);
  CHECK(a.pure == Purity::assumed);
  CHECK(a.dz.lower == 3);
  CHECK(a.dz.upper <= 15);
  CHECK(a.dz_path.find("out of budget") != std::string::npos);
}

TEST_CASE("sub-alternant AQC") {
  auto f = make_field(4);
  const SubAlternantAqc q = sub_alternant_aqc(f, 4, 3, 7);
  CHECK(q.report.n == 15);
  CHECK(q.report.k == q.code.k() - 1);
  CHECK(q.report.k >= 2);
  CHECK(q.report.dz.lower >= 4);
  CHECK(q.report.dz.is_exact());
  CHECK(q.report.dx.lower == 2);
  CHECK(q.report.pure != Purity::assumed);
  CHECK_THROWS_AS(sub_alternant_aqc(f, 4, 4, 7), UsageError);
  CHECK_THROWS_AS(sub_alternant_aqc(f, 4, 1, 7), UsageError);
}

TEST_CASE("z^t + A AQCs over GF(2^6)") {
  auto f = make_field(6);
  struct Row {
    unsigned t;
    BezzateevVariant v;
    std::size_t n, k, dz;
  };
  for (const Row& row : {Row{9, BezzateevVariant::base, 55, 15, 19}, Row{9, BezzateevVariant::extended, 56, 15, 20},
                         Row{9, BezzateevVariant::punctured, 54, 15, 18}, Row{7, BezzateevVariant::punctured, 56, 16, 14}}) {
    const BezzateevAqc q = bezzateev_aqc({f, row.t, 1, row.v});
    CHECK(q.report.n == row.n);
    CHECK(q.report.k == row.k);
    CHECK(q.report.dz.lower == row.dz);
    CHECK(q.report.dz.is_exact());
    CHECK(q.report.dx.lower == 2);
    CHECK(q.report.dx.is_exact());
    CHECK(q.goppa_dim == row.k + 1);
  }
}

TEST_CASE("expanded GRS AQC") {
  const ExpandedGrsAqc a = expanded_grs_aqc(make_field(3), 4, 4);
  CHECK(a.big_n == 7);
  CHECK(a.ext_k == 1);
  CHECK(a.ext_dz == 4);
  CHECK(a.ext_dx == 4);
  CHECK(a.binary.n == 21);
  CHECK(a.binary.k == 3);
  CHECK(a.contained);
  CHECK(a.dual_is_image);

  const ExpandedGrsAqc b = expanded_grs_aqc(make_field(4), 8, 12);
  CHECK(b.ext_k == 5);
  CHECK(b.ext_dz == 8);
  CHECK(b.ext_dx == 4);
  CHECK(b.binary.n == 60);
  CHECK(b.binary.k == 20);
  CHECK(b.binary.dz.lower >= 1);

  CHECK_THROWS_AS(expanded_grs_pair(make_field(3), 3, 4), UsageError);
  CHECK_THROWS_AS(expanded_grs_pair(make_field(3), 5, 4), UsageError);
  CHECK_THROWS_AS(expanded_grs_pair(make_field(3), 4, 7), UsageError);
  for (int m = 2; m <= 4; ++m) {
    auto f = make_field(m);
    const std::size_t n = f->group_order();
    for (std::size_t k1 = (n + 1) / 2; k1 < n; ++k1) {
      for (std::size_t k2 = k1; k2 < n; ++k2) {
        const ExpandedGrsPair p = expanded_grs_pair(f, k1, k2);
        CHECK(p.contained);
        CHECK(p.dual_is_image);
      }
    }
  }
}

TEST_CASE("entropy and GV curves") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(inverse_entropy(1.0) == doctest::Approx(0.5));
  CHECK(inverse_entropy(0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(binary_entropy(1.5), UsageError);
  CHECK_THROWS_AS(inverse_entropy(-0.1), UsageError);
  // 1 - 2 H(d) = 0 at d = H^{-1}(1/2); independent bisection on the curve itself.
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (1 - 2 * binary_entropy(mid) > 0 ? lo : hi) = mid;
  }
  CHECK(std::abs(lo - 0.110028) < 1e-6);
  CHECK(std::abs(inverse_entropy(0.5) - lo) < 1e-9);

  const auto rows = gv_curves(0.005, 0.01);
  CHECK(rows.front().delta == 0.0);
  CHECK(rows.front().classical == 1.0);
  CHECK(rows.front().quantum_sym == 1.0);
  CHECK(rows.back().delta == doctest::Approx(0.5));
  CHECK(rows.back().classical == doctest::Approx(0.0));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].classical <= rows[i - 1].classical);
    CHECK(rows[i].quantum_sym <= rows[i - 1].quantum_sym);
    CHECK(rows[i].aqc_dx_fixed <= rows[i - 1].aqc_dx_fixed);
    CHECK(rows[i].classical - std::max(0.0, 1 - 2 * binary_entropy(rows[i].delta)) <= binary_entropy(rows[i].delta) + 1e-12);
  }
  CHECK(gv_curves(0.01).front().aqc_dx_fixed == 1.0);
  CHECK(gv_csv(rows).rfind("delta,R_classical,R_quantum_sym,R_aqc_dx_fixed\n", 0) == 0);
  CHECK_THROWS_AS(gv_curves(0.02), UsageError);
  CHECK_THROWS_AS(gv_curves(0.0), UsageError);
  const auto surf = gv_surface(0.01);
  CHECK(surf.size() == 51 * 51);
  CHECK(gv_surface_csv(surf).rfind("delta_x,delta_z,R_Q\n", 0) == 0);
}

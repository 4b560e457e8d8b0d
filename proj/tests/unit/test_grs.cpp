#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gaqc/errors.hpp"
#include "gaqc/grs.hpp"

using namespace gaqc;

namespace {

// Weight histogram of the extension-field row space by counting through all q^k messages.
std::vector<std::uint64_t> brute_histogram(const MatrixExt& g) {
  const Field& f = *g.field();
  const std::size_t n = g.cols(), k = g.rows();
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<gf_t> msg(k, 0), cw(n);
  for (;;) {
    std::fill(cw.begin(), cw.end(), 0);
    for (std::size_t r = 0; r < k; ++r) {
      if (msg[r] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) cw[j] ^= f.mul(msg[r], g(r, j));
    }
    ++hist[n - static_cast<std::size_t>(std::count(cw.begin(), cw.end(), 0))];
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.size()) msg[i++] = 0;
    if (i == k) break;
  }
  return hist;
}

// Row space equality over GF(2^m) through rank counts.
bool same_row_space(const MatrixExt& a, const MatrixExt& b) {
  if (a.cols() != b.cols()) return false;
  MatrixExt both(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) both(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) both(a.rows() + r, c) = b(r, c);
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(both);
}

GrsSpec random_grs(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<gf_t> pool(f->size());
  for (gf_t x = 0; x < f->size(); ++x) pool[x] = x;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t n = 3 + rng() % (f->size() - 3);
  std::vector<gf_t> a(pool.begin(), pool.begin() + static_cast<long>(n)), v(n);
  for (auto& x : v) x = static_cast<gf_t>(1 + rng() % f->group_order());
  return GrsSpec(f, a, v, 1 + rng() % (n - 1));
}

}  // namespace

TEST_CASE("RS parity matrix rows") {
  auto f = make_field(3);
  const MatrixExt h2 = rs_parity_matrix({f, 2});
  REQUIRE(h2.rows() == 1);
  for (std::size_t j = 0; j < 7; ++j) CHECK(h2(0, j) == 1);
  const MatrixExt h3 = rs_parity_matrix({f, 3});
  REQUIRE(h3.rows() == 2);
  for (std::size_t j = 0; j < 7; ++j) CHECK(h3(1, j) == f->exp(static_cast<long long>(j)));
  CHECK(rank(h3) == 2);
  for (unsigned delta = 2; delta <= 6; ++delta) CHECK(null_space(rs_parity_matrix({f, delta})).rows() == 7 - delta + 1);
  CHECK_THROWS_AS(rs_parity_matrix({f, 1}), UsageError);
  CHECK_THROWS_AS(rs_parity_matrix({f, 7}), UsageError);
}

TEST_CASE("GRS spec validation") {
  auto f = make_field(3);
  CHECK_THROWS_AS(GrsSpec(f, {1, 2, 2}, {1, 1, 1}, 1), UsageError);
  CHECK_THROWS_AS(GrsSpec(f, {1, 2, 3}, {1, 0, 1}, 1), UsageError);
  CHECK_THROWS_AS(GrsSpec(f, {1, 2, 3}, {1, 1, 1}, 3), UsageError);
  CHECK_THROWS_AS(GrsSpec(f, {1, 2, 3}, {1, 1}, 1), UsageError);
  const GrsSpec one(f, {1, 2, 3}, {4, 5, 6}, 1);
  const MatrixExt g = grs_generator(one);
  CHECK(g.rows() == 1);
  CHECK(g(0, 0) == 4);
  CHECK(g(0, 2) == 6);
}

TEST_CASE("GRS duality on random specs") {
  std::mt19937_64 rng(11);
  for (int m = 3; m <= 5; ++m) {
    auto f = make_field(m);
    for (int trial = 0; trial < 12; ++trial) {
      const GrsSpec s = random_grs(f, rng);
      const GrsSpec d = grs_dual(s);
      CHECK(d.k() == s.n() - s.k());
      CHECK(mul_transpose(grs_generator(s), grs_generator(d)).rows() == s.k());
      const MatrixExt prod = mul_transpose(grs_generator(s), grs_generator(d));
      bool zero = true;
      for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c) zero = zero && prod(r, c) == 0;
      CHECK(zero);
      CHECK(grs_parity_matrix(s) == grs_generator(d));
      CHECK(same_row_space(grs_generator(grs_dual(d)), grs_generator(s)));
    }
  }
}

TEST_CASE("dual multipliers of the all-ones full-group code are the locators") {
  for (int m = 2; m <= 6; ++m) {
    auto f = make_field(m);
    const auto a = full_group_locators(*f);
    const GrsSpec s(f, a, std::vector<gf_t>(a.size(), 1), 1);
    CHECK(s.y() == a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      gf_t prod = 1;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) prod = f->mul(prod, a[i] ^ a[j]);
      }
      CHECK(prod == f->inv(a[i]));
    }
  }
}

TEST_CASE("RS equals its GRS form") {
  for (int m = 3; m <= 4; ++m) {
    auto f = make_field(m);
    for (unsigned delta = 2; delta + 1 <= f->group_order(); ++delta) {
      const RsSpec rs{f, delta};
      const GrsSpec g = rs_as_grs(rs);
      CHECK(g.k() == rs.k());
      // The RS kernel has dimension k and contains every GRS codeword.
      CHECK(same_row_space(null_space(rs_parity_matrix(rs)), grs_generator(g)));
    }
  }
}

TEST_CASE("GRS codes are MDS with the predicted weight distribution") {
  std::mt19937_64 rng(5);
  for (int m = 2; m <= 4; ++m) {
    auto f = make_field(m);
    const auto a = full_group_locators(*f);
    for (std::size_t k = 1; k < a.size() && std::pow(f->size(), k) <= (1 << 16); ++k) {
      std::vector<gf_t> v(a.size());
      for (auto& x : v) x = static_cast<gf_t>(1 + rng() % f->group_order());
      const GrsSpec s(f, a, v, k);
      const auto hist = brute_histogram(grs_generator(s));
      const unsigned n = static_cast<unsigned>(a.size()), d = n - static_cast<unsigned>(k) + 1;
      for (unsigned w = 0; w <= n; ++w) CHECK(BigInt(hist[w]) == mds_weight_enumerator(n, d, f->size(), w));
    }
  }
}

TEST_CASE("self-dual expansion commutes with duality") {
  for (int m = 2; m <= 4; ++m) {
    auto f = make_field(m);
    const Basis basis(f, find_self_dual_basis(*f));
    const auto a = full_group_locators(*f);
    for (std::size_t k = 1; k < a.size(); ++k) {
      const GrsSpec s(f, a, a, k);
      const LinearCode d = expanded_grs_code(s, basis);
      CHECK(d.n() == m * a.size());
      CHECK(d.k() == m * k);
      CHECK(expanded_grs_code(grs_dual(s), basis) == dual(d));
    }
  }
}

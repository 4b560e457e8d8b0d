#include "doctest.h"

#include <random>

#include "gaqc/alternant.hpp"
#include "gaqc/distance.hpp"
#include "gaqc/errors.hpp"

using namespace gaqc;

namespace {

// Direct extension-field check of sum_j c_j a_j^i y_j = 0 for i < r.
bool satisfies(const AlternantSpec& s, std::uint32_t c) {
  const Field& f = *s.field;
  for (std::size_t i = 0; i < s.r; ++i) {
    gf_t acc = 0;
    for (std::size_t j = 0; j < s.a.size(); ++j) {
      if (c >> j & 1u) acc ^= f.mul(f.pow(s.a[j], static_cast<long long>(i)), s.y[j]);
    }
    if (acc != 0) return false;
  }
  return true;
}

BitVector to_vector(std::uint32_t bits, std::size_t n) {
  BitVector v(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (bits >> j & 1u) v.set(j);
  }
  return v;
}

std::vector<gf_t> random_multipliers(const Field& f, std::mt19937_64& rng) {
  std::vector<gf_t> y(f.group_order());
  for (auto& x : y) x = static_cast<gf_t>(1 + rng() % f.group_order());
  return y;
}

bool in_rs(const FieldPtr& f, unsigned delta, const std::vector<gf_t>& y) {
  const MatrixExt h = rs_parity_matrix({f, delta});
  for (std::size_t i = 0; i < h.rows(); ++i) {
    gf_t acc = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) acc ^= f->mul(h(i, j), y[j]);
    if (acc) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("expanded alternant kernel equals the direct codeword set") {
  std::mt19937_64 rng(3);
  for (int m = 3; m <= 4; ++m) {
    auto f = make_field(m);
    for (std::size_t r = 1; r <= 3; ++r) {
      const AlternantSpec s{f, full_group_locators(*f), random_multipliers(*f, rng), r};
      const LinearCode c = alternant_code(s);
      std::size_t count = 0;
      for (std::uint32_t bits = 0; bits < (1u << s.a.size()); ++bits) {
        const bool direct = satisfies(s, bits);
        count += direct;
        if (direct != c.contains(to_vector(bits, s.a.size()))) {
          FAIL("membership differs at " << bits);
        }
      }
      CHECK(count == (std::size_t{1} << c.k()));
    }
  }
}

TEST_CASE("alternant dimension bound and nesting in r") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = make_field(3 + trial % 4);
    const std::size_t n = f->group_order();
    const std::size_t r = 1 + rng() % (n / 3);
    AlternantSpec s{f, full_group_locators(*f), random_multipliers(*f, rng), r};
    const LinearCode c = alternant_code(s);
    CHECK(static_cast<long long>(c.k()) >= static_cast<long long>(n) - f->m() * static_cast<long long>(r));
    CHECK(c.bound().lower == r + 1);
    s.r = r + 1;
    CHECK(is_subcode(alternant_code(s), c));
  }
  auto f = make_field(4);
  CHECK_THROWS_AS(alternant_code({f, full_group_locators(*f), std::vector<gf_t>(15, 1), 15}), UsageError);
  CHECK_THROWS_AS(alternant_code({f, full_group_locators(*f), std::vector<gf_t>(15, 0), 2}), UsageError);
}

TEST_CASE("sampled multipliers are all-nonzero RS codewords") {
  for (int m = 3; m <= 6; ++m) {
    auto f = make_field(m);
    for (unsigned delta = 2; delta + 1 < f->group_order(); delta += 3) {
      const SampledY s = sample_sub_alternant_y(f, delta, 100 + delta);
      CHECK(s.attempts >= 1);
      CHECK(in_rs(f, delta, s.y));
      CHECK(std::count(s.y.begin(), s.y.end(), 0) == 0);
      CHECK(sample_sub_alternant_y(f, delta, 100 + delta).y == s.y);
    }
  }
  auto f = make_field(4);
  // The single RS(n, 2) check is the all-ones row, so for odd n the all-ones word fails it while
  // y_j = alpha^j passes (the group elements sum to zero).
  std::vector<gf_t> powers(15);
  for (std::size_t j = 0; j < 15; ++j) powers[j] = f->exp(static_cast<long long>(j));
  CHECK_FALSE(in_rs(f, 2, std::vector<gf_t>(15, 1)));
  CHECK(in_rs(f, 2, powers));
  CHECK_NOTHROW(SubAlternantSpec(f, 2, powers, 1));
  CHECK_THROWS_AS(SubAlternantSpec(f, 2, std::vector<gf_t>(15, 1), 1), UsageError);
}

TEST_CASE("sub-alternant codes contain the all-ones word when r < delta") {
  const BitVector ones15 = BitVector::ones(15), ones31 = BitVector::ones(31);
  for (int i = 0; i < 50; ++i) {
    const int m = 4 + i % 2;
    auto f = make_field(m);
    const unsigned n = f->group_order();
    const unsigned delta = 3 + static_cast<unsigned>(i) % (n / 2 - 2);
    const std::size_t r = 1 + static_cast<std::size_t>(i) % (delta - 1);
    const SubAlternantSpec s = SubAlternantSpec::sampled(f, delta, r, 1000 + i);
    CHECK(s.all_ones_guaranteed());
    const LinearCode c = sub_alternant_code(s);
    CHECK(c.contains(m == 4 ? ones15 : ones31));
    CHECK(static_cast<long long>(c.k()) >= static_cast<long long>(n) - m * static_cast<long long>(r));
  }
}

TEST_CASE("sub-alternant m=4 delta=4 r=3") {
  auto f = make_field(4);
  const SubAlternantSpec s = SubAlternantSpec::sampled(f, 4, 3, 7);
  const LinearCode c = sub_alternant_code(s);
  CHECK(c.n() == 15);
  CHECK(c.k() >= 3);
  std::size_t best = 15;
  for (std::uint32_t bits = 1; bits < (1u << 15); ++bits) {
    if (satisfies(s.alternant(), bits)) best = std::min<std::size_t>(best, std::popcount(bits));
  }
  const DistanceCert d = min_distance_exact(c);
  CHECK(d.is_exact());
  CHECK(d.lower == best);
  CHECK(best >= 4);
  CHECK_FALSE(s.in_asymptotic_regime() != (2 * 3 > 4 && 3 < 4 && 3 < 15 / 2.0));
}

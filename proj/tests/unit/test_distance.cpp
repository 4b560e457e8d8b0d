#include "doctest.h"

#include <random>

#include "gaqc/distance.hpp"
#include "gaqc/errors.hpp"

using namespace gaqc;

namespace {

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  MatrixF2 g(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.set(i, j, rng() & 1u);
  }
  return LinearCode::from_generator(g, "random");
}

// Plain binary counting over all messages; independent of the Gray-code walk.
std::vector<BitVector> all_codewords(const LinearCode& c) {
  std::vector<BitVector> out;
  for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << c.k()); ++msg) {
    BitVector v(c.n());
    for (std::size_t r = 0; r < c.k(); ++r) {
      if (msg >> r & 1u) v ^= c.generator().row_vector(r);
    }
    out.push_back(v);
  }
  return out;
}

std::size_t brute_min(const LinearCode& c) {
  std::size_t best = c.n();
  for (const auto& v : all_codewords(c)) {
    if (!v.is_zero()) best = std::min(best, v.weight());
  }
  return best;
}

}  // namespace

TEST_CASE("small reference distances") {
  CHECK(min_distance_exact(hamming_code(3)).lower == 3);
  CHECK(min_distance_exact(hamming_code(3)).is_exact());
  CHECK(min_distance_exact(repetition_code(9)).lower == 9);
  CHECK(min_distance_exact(dual(hamming_code(3))).lower == 4);
  CHECK(min_distance_exact(extend(hamming_code(3))).lower == 4);
  const auto h = weight_distribution(hamming_code(3));
  CHECK(h == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
  CHECK_THROWS_AS(min_distance_exact(LinearCode::from_generator(MatrixF2(0, 5), "zero")), UsageError);
}

TEST_CASE("enumeration, column search and MacWilliams agree with brute force") {
  std::mt19937_64 rng(2024);
  Budget enumerate_only, search_only;
  search_only.k_max = 0;  // forces the column search and dual paths
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 8 + rng() % 13, k = 1 + rng() % (n - 2);
    const LinearCode c = random_code(rng, n, k);
    if (c.k() == 0) continue;
    const std::size_t d = brute_min(c);
    const DistanceCert e = min_distance_exact(c, enumerate_only);
    REQUIRE(e.is_exact());
    CHECK(e.lower == d);
    const DistanceCert s = min_distance_exact(c.with_bound({}), search_only);
    REQUIRE(s.is_exact());
    CHECK(s.lower == d);
    const SearchResult r = low_weight_search(c.parity(), n, {});
    CHECK(r.cert.lower == d);
    BitVector v(n);
    for (std::size_t j : r.witness) v.set(j);
    CHECK(c.contains(v));
    CHECK(v.weight() == d);
  }
}

TEST_CASE("MacWilliams path on a large-dimension code") {
  // [63, 57] Hamming: dual enumeration gives d = 3 without a column search
  Budget b;
  b.k_max = 10;
  b.column_volume = 0;
  const DistanceCert d = min_distance_exact(hamming_code(6).with_bound({}), b);
  CHECK(d.is_exact());
  CHECK(d.lower == 3);
}

TEST_CASE("projected columns beyond 64 parity rows") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    LinearCode c = random_code(rng, 82, 12);  // 70 parity rows
    MatrixF2 g = c.generator();
    for (std::size_t j = 0; j < 82; ++j) g.set(0, j, j % 17 == trial);  // plant a light codeword
    c = LinearCode::from_generator(g, "planted");
    REQUIRE(c.parity().rows() > 64);
    const std::size_t d = brute_min(c);
    const SearchResult r = low_weight_search(c.parity(), d, {});
    CHECK(r.cert.is_exact());
    CHECK(r.cert.lower == d);
  }
}

TEST_CASE("low weight search reports intervals and guards volume") {
  const LinearCode h = hamming_code(4);  // d = 3
  const SearchResult r = low_weight_search(h.parity(), 2);
  CHECK(!r.cert.is_exact());
  CHECK(r.cert.lower == 3);
  MatrixF2 eq = MatrixF2::from_text("1011\n0110");
  CHECK(low_weight_search(eq, 3).cert.lower == 2);
  Budget tiny;
  tiny.column_volume = 100;
  CHECK_THROWS_AS(low_weight_search(hamming_code(6).parity(), 6, tiny), BudgetError);
  try {
    low_weight_search(hamming_code(6).parity(), 6, tiny);
  } catch (const BudgetError& e) {
    CHECK(e.volume() > 100);
  }
}

TEST_CASE("multi-pass column search matches a single pass") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    MatrixF2 h(14, 40);
    for (std::size_t i = 0; i < 14; ++i) {
      for (std::size_t j = 0; j < 40; ++j) h.set(i, j, rng() & 1u);
    }
    Budget one, many;
    many.table_entries = 97;
    CHECK(ColumnSearch::volume(40, 8, 97) > ColumnSearch::volume(40, 8));
    for (std::size_t w : {3u, 4u, 5u, 6u}) {
      ColumnSearch a(h, one), b(h, many);
      const auto x = a.find(w), y = b.find(w);
      REQUIRE(x.has_value() == y.has_value());
      if (!y) continue;
      CHECK(y->size() == w);
      std::vector<int> sum(14, 0);
      for (std::size_t j : *y) {
        for (std::size_t i = 0; i < 14; ++i) sum[i] ^= h.get(i, j);
      }
      CHECK(std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; }));
    }
  }
}

TEST_CASE("relative minimum weight") {
  std::mt19937_64 rng(99);
  const LinearCode h = hamming_code(3), s = dual(h);
  const RelativeWeight rw = relative_min_weight(h, s);
  CHECK(rw.relative == 3);
  CHECK(rw.full.lower == 3);
  CHECK(h.contains(rw.witness));
  CHECK(!s.contains(rw.witness));
  CHECK_THROWS_AS(relative_min_weight(h, h), UsageError);
  CHECK_THROWS_AS(relative_min_weight(s, h), UsageError);

  // Brute-force oracle and the column-search path on random nested pairs
  Budget search_only;
  search_only.k_max = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10 + rng() % 8;
    const LinearCode c1 = random_code(rng, n, 4 + rng() % 5);
    MatrixF2 sub = c1.generator().row_slice(0, 1 + rng() % (c1.k() - 1));
    const LinearCode cs = LinearCode::from_generator(sub, "sub");
    std::size_t best = n + 1;
    for (const auto& v : all_codewords(c1)) {
      if (!cs.contains(v)) best = std::min(best, v.weight());
    }
    CHECK(relative_min_weight(c1, cs).relative == best);
    const RelativeWeight col = relative_min_weight(c1, cs, search_only);
    CHECK(col.relative == best);
    CHECK(col.full.lower == brute_min(c1));
    CHECK(col.relative >= col.full.lower);
  }
}

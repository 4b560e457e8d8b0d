#include "doctest.h"

#include "gaqc/errors.hpp"
#include "gaqc/linear_code.hpp"

using namespace gaqc;

TEST_CASE("Hamming code parameters and orthogonality") {
  const LinearCode h = hamming_code(3);
  CHECK(h.n() == 7);
  CHECK(h.k() == 4);
  CHECK(h.bound().lower == 3);
  CHECK(mul_transpose(h.generator(), h.parity()).is_zero());
  const LinearCode d = dual(h);
  CHECK(d.k() == 3);
  CHECK(is_subcode(d, h));  // the simplex code sits inside the Hamming code
  CHECK(!is_subcode(h, d));
}

TEST_CASE("derived codes") {
  const LinearCode h = hamming_code(3);
  const LinearCode e = extend(h);
  CHECK(e.n() == 8);
  CHECK(e.k() == 4);
  CHECK(e.bound().lower == 4);
  for (std::size_t r = 0; r < e.k(); ++r) CHECK(e.generator().row_vector(r).weight() % 2 == 0);
  CHECK(dual(e) == e);  // extended Hamming [8,4,4] is self-dual

  const LinearCode p = puncture(h, 6);
  CHECK(p.n() == 6);
  CHECK(p.k() == 4);
  CHECK(p.bound().lower == 2);

  const LinearCode s = shorten(h, 0);
  CHECK(s.n() == 6);
  CHECK(s.k() == 3);
  CHECK(s.bound().lower == 3);

  const Expurgation x = expurgate(h);
  CHECK(x.changed);
  CHECK(x.code.k() == 3);
  CHECK(x.code.bound().lower == 4);
  CHECK(!expurgate(x.code).changed);
  CHECK_THROWS_AS(puncture(h, 7), UsageError);
}

TEST_CASE("exact bounds survive extension") {
  const LinearCode h = hamming_code(3).with_bound(DistanceCert::exact(3, CertMethod::enumeration));
  const LinearCode e = extend(h);
  CHECK(e.bound().is_exact());
  CHECK(e.bound().lower == 4);
}

TEST_CASE("certificate intersection") {
  const auto a = DistanceCert::bounds(3, 10, CertMethod::design_bound);
  const auto b = DistanceCert::bounds(5, 12, CertMethod::column_search);
  const auto c = a.intersect(b);
  CHECK(c.lower == 5);
  CHECK(c.upper == 10);
  CHECK(c.method == CertMethod::column_search);
  CHECK_THROWS_AS(a.intersect(DistanceCert::exact(2, CertMethod::enumeration)), InternalError);
}

TEST_CASE("equality is codeword-set equality") {
  const LinearCode h = hamming_code(4);
  const LinearCode g = LinearCode::from_generator(h.generator(), "copy");
  CHECK(g == h);
  CHECK(LinearCode::from_parity(h.parity(), "again") == h);
  CHECK(!(dual(h) == h));
}

TEST_CASE("standard small codes") {
  CHECK(repetition_code(5).k() == 1);
  CHECK(even_weight_code(5).k() == 4);
  CHECK(dual(repetition_code(5)) == even_weight_code(5));
  CHECK(even_weight_code(6).contains(BitVector::ones(6)));
  CHECK(!even_weight_code(5).contains(BitVector::ones(5)));
}

TEST_CASE("MDS weight enumerator sums to q^k") {
  // [7, 3, 5] Reed-Solomon over GF(8)
  BigInt total = 0;
  for (unsigned w = 0; w <= 7; ++w) total += mds_weight_enumerator(7, 5, 8, w);
  CHECK(total == BigInt(512));
  CHECK(mds_weight_enumerator(7, 5, 8, 5) == BigInt(147));
  CHECK(mds_weight_enumerator(7, 5, 8, 4) == BigInt(0));
}

#include "gaqc/linear_code.hpp"

#include <algorithm>

#include "gaqc/errors.hpp"

namespace gaqc {

std::string to_string(CertStatus s) { return s == CertStatus::exact ? "exact" : "interval"; }

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::trivial: return "trivial";
    case CertMethod::enumeration: return "enumeration";
    case CertMethod::column_search: return "column-search";
    case CertMethod::design_bound: return "design-bound";
    case CertMethod::coset_enumeration: return "coset-enumeration";
  }
  return "unknown";
}

DistanceCert DistanceCert::bounds(std::size_t lo, std::size_t hi, CertMethod how) {
  if (lo > hi) throw InternalError("distance interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
  return {lo, hi, lo == hi ? CertStatus::exact : CertStatus::interval, how};
}

DistanceCert DistanceCert::intersect(const DistanceCert& other) const {
  const std::size_t lo = std::max(lower, other.lower);
  const std::size_t hi = std::min(upper, other.upper);
  if (lo > hi) {
    throw InternalError("contradictory distance certificates [" + std::to_string(lower) + "," + std::to_string(upper) +
                        "] and [" + std::to_string(other.lower) + "," + std::to_string(other.upper) + "]");
  }
  // Credit the certificate that supplied the sharper lower bound; exact results win outright.
  CertMethod how = other.lower > lower ? other.method : method;
  if (other.is_exact() && !is_exact()) how = other.method;
  if (is_exact()) how = method;
  return {lo, hi, lo == hi ? CertStatus::exact : CertStatus::interval, how};
}

// ----------------------------------------------------------------------------------------------

LinearCode::LinearCode(MatrixF2 gen, MatrixF2 par, std::string label, DistanceCert bound)
    : n_(gen.cols()), gen_(std::move(gen)), par_(std::move(par)), label_(std::move(label)), bound_(bound) {
  bound_.upper = std::min(bound_.upper, std::max<std::size_t>(n_, 1));
  if (bound_.lower > bound_.upper) throw InternalError("design bound exceeds code length for " + label_);
  bound_.status = bound_.lower == bound_.upper ? CertStatus::exact : CertStatus::interval;
  if (gen_.rows() + par_.rows() != n_) throw InternalError("rank(G) + rank(H) != n for " + label_);
  if (!mul_transpose(gen_, par_).is_zero()) throw InternalError("G * H^T != 0 for " + label_);
}

LinearCode LinearCode::from_generator(const MatrixF2& gen, std::string label, DistanceCert bound) {
  RrefF2 e = rref(gen);
  MatrixF2 par = null_space(e.reduced.rows() ? e.reduced : MatrixF2(0, gen.cols()));
  return LinearCode(std::move(e.reduced), std::move(par), std::move(label), bound);
}

LinearCode LinearCode::from_parity(const MatrixF2& par, std::string label, DistanceCert bound) {
  MatrixF2 gen = null_space(par);
  MatrixF2 reduced = rref(par).reduced;
  return LinearCode(std::move(gen), std::move(reduced), std::move(label), bound);
}

bool LinearCode::contains(std::span<const word_t> words) const {
  for (std::size_t r = 0; r < par_.rows(); ++r) {
    const auto pr = par_.row(r);
    word_t acc = 0;
    for (std::size_t w = 0; w < pr.size(); ++w) acc ^= pr[w] & words[w];
    if (std::popcount(acc) & 1) return false;
  }
  return true;
}

bool LinearCode::contains(const BitVector& v) const {
  if (v.size() != n_) throw UsageError("vector length differs from code length");
  return contains(v.words());
}

LinearCode LinearCode::with_bound(const DistanceCert& d) const {
  LinearCode c = *this;
  c.bound_ = d;
  c.bound_.upper = std::min(c.bound_.upper, std::max<std::size_t>(n_, 1));
  if (c.bound_.lower > c.bound_.upper) throw InternalError("distance bound exceeds code length for " + label_);
  c.bound_.status = c.bound_.lower == c.bound_.upper ? CertStatus::exact : CertStatus::interval;
  return c;
}

LinearCode LinearCode::relabeled(std::string label) const {
  LinearCode c = *this;
  c.label_ = std::move(label);
  return c;
}

bool LinearCode::operator==(const LinearCode& o) const {
  if (n_ != o.n_ || k() != o.k()) return false;
  for (std::size_t r = 0; r < o.k(); ++r) {
    if (!contains(o.gen_.row(r))) return false;
  }
  return true;
}

bool is_subcode(const LinearCode& sub, const LinearCode& super) {
  if (sub.n() != super.n()) return false;
  for (std::size_t r = 0; r < sub.k(); ++r) {
    if (!super.contains(sub.generator().row(r))) return false;
  }
  return true;
}

LinearCode dual(const LinearCode& c) {
  return LinearCode::from_generator(c.parity(), "dual(" + c.label() + ")");
}

namespace {

std::size_t round_up_even(std::size_t x) { return x + (x & 1u); }

DistanceCert derived(std::size_t lo, std::size_t hi, const DistanceCert& from) {
  const CertMethod how = lo > 1 ? (from.method == CertMethod::trivial ? CertMethod::design_bound : from.method)
                                : CertMethod::trivial;
  return DistanceCert::bounds(std::max<std::size_t>(lo, 1), std::max(hi, std::max<std::size_t>(lo, 1)), how);
}

void check_pos(const LinearCode& c, std::size_t pos) {
  if (pos >= c.n()) {
    throw UsageError("coordinate " + std::to_string(pos) + " out of range for length " + std::to_string(c.n()));
  }
}

}  // namespace

LinearCode extend(const LinearCode& c) {
  const MatrixF2& g = c.generator();
  MatrixF2 ext(g.rows(), c.n() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
      if (g.get(r, j)) {
        ext.set(r, j);
        ++w;
      }
    }
    if (w & 1u) ext.set(r, c.n());
  }
  const DistanceCert& b = c.bound();
  DistanceCert nb;
  if (b.is_exact()) {
    nb = DistanceCert::exact(round_up_even(b.lower), b.method);
  } else {
    nb = derived(round_up_even(b.lower), b.upper == DistanceCert::kUnbounded ? b.upper : b.upper + 1, b);
  }
  return LinearCode::from_generator(ext, "ETC(" + c.label() + ")", nb);
}

LinearCode puncture(const LinearCode& c, std::size_t pos) {
  check_pos(c, pos);
  const DistanceCert& b = c.bound();
  return LinearCode::from_generator(c.generator().drop_column(pos),
                                    "PTC@" + std::to_string(pos) + "(" + c.label() + ")",
                                    derived(b.lower > 1 ? b.lower - 1 : 1, b.upper, b));
}

LinearCode shorten(const LinearCode& c, std::size_t pos) {
  check_pos(c, pos);
  MatrixF2 g = c.generator();
  std::size_t pivot = g.rows();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (g.get(r, pos)) {
      pivot = r;
      break;
    }
  }
  MatrixF2 kept(0, g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r == pivot) continue;
    if (pivot < g.rows() && g.get(r, pos)) g.xor_row(r, pivot);
    kept.append_row(g.row(r));
  }
  const DistanceCert& b = c.bound();
  return LinearCode::from_generator(kept.drop_column(pos), "STC@" + std::to_string(pos) + "(" + c.label() + ")",
                                    derived(b.lower, DistanceCert::kUnbounded, b));
}

Expurgation expurgate(const LinearCode& c) {
  MatrixF2 g = c.generator();
  auto odd = [&](std::size_t r) { return c.generator().row_vector(r).weight() & 1u; };
  std::size_t pivot = g.rows();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (odd(r)) {
      pivot = r;
      break;
    }
  }
  if (pivot == g.rows()) return {c, false};
  MatrixF2 kept(0, g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r == pivot) continue;
    if (odd(r)) g.xor_row(r, pivot);
    kept.append_row(g.row(r));
  }
  const DistanceCert& b = c.bound();
  return {LinearCode::from_generator(kept, "EPC(" + c.label() + ")",
                                     derived(round_up_even(b.lower), DistanceCert::kUnbounded, b)),
          true};
}

LinearCode repetition_code(std::size_t n) {
  MatrixF2 g(0, n);
  g.append_row(BitVector::ones(n));
  return LinearCode::from_generator(g, "repetition n=" + std::to_string(n));
}

LinearCode even_weight_code(std::size_t n) {
  MatrixF2 h(0, n);
  h.append_row(BitVector::ones(n));
  return LinearCode::from_parity(h, "even-weight n=" + std::to_string(n),
                                 DistanceCert::bounds(n >= 2 ? 2 : 1, n, CertMethod::design_bound));
}

LinearCode hamming_code(unsigned r) {
  if (r < 2 || r > 16) throw UsageError("Hamming code redundancy must lie in 2..16");
  const std::size_t n = (std::size_t{1} << r) - 1;
  MatrixF2 h(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (unsigned i = 0; i < r; ++i) {
      if ((j + 1) >> i & 1u) h.set(i, j);
    }
  }
  return LinearCode::from_parity(h, "hamming r=" + std::to_string(r),
                                 DistanceCert::bounds(3, n, CertMethod::design_bound));
}

BigInt mds_weight_enumerator(unsigned n, unsigned d, unsigned long long q, unsigned w) {
  if (w > n) throw UsageError("weight exceeds length");
  if (d < 1 || d > n) throw UsageError("MDS distance must satisfy 1 <= d <= n");
  if (w == 0) return 1;
  if (w < d) return 0;
  auto binom = [](unsigned a, unsigned b) {
    BigInt r = 1;
    for (unsigned i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  BigInt sum = 0;
  const BigInt qq = q;
  for (unsigned j = 0; j <= w - d; ++j) {
    BigInt term = binom(w - 1, j) * boost::multiprecision::pow(qq, w - d - j);
    if (j & 1u) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return binom(n, w) * (qq - 1) * sum;
}

}  // namespace gaqc

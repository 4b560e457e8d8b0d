#include "gaqc/alternant.hpp"

#include <random>

#include "gaqc/errors.hpp"

namespace gaqc {

void AlternantSpec::validate() const {
  if (!field) throw UsageError("alternant spec without a field");
  if (a.size() != y.size()) throw UsageError("alternant locators and multipliers differ in length");
  if (r < 1 || r >= a.size()) throw UsageError("alternant parameter r must satisfy 1 <= r < n");
  std::vector<bool> seen(field->size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!field->contains(a[i]) || !field->contains(y[i])) throw UsageError("alternant entry outside the field");
    if (seen[a[i]]) throw UsageError("repeated alternant locator");
    seen[a[i]] = true;
    if (y[i] == 0) throw UsageError("zero alternant multiplier");
  }
}

MatrixExt alternant_parity(const AlternantSpec& spec) {
  spec.validate();
  const Field& f = *spec.field;
  MatrixExt h(spec.field, spec.r, spec.a.size());
  for (std::size_t j = 0; j < spec.a.size(); ++j) {
    gf_t x = spec.y[j];
    for (std::size_t i = 0; i < spec.r; ++i) {
      h(i, j) = x;
      x = f.mul(x, spec.a[j]);
    }
  }
  return h;
}

LinearCode alternant_code(const AlternantSpec& spec) {
  const MatrixF2 b = expand_to_binary(alternant_parity(spec), Basis::polynomial(spec.field));
  return LinearCode::from_parity(b, "alternant m=" + std::to_string(spec.field->m()) + " r=" + std::to_string(spec.r),
                                 DistanceCert::bounds(spec.r + 1, DistanceCert::kUnbounded, CertMethod::design_bound));
}

namespace {

bool in_rs(const Field& f, unsigned delta, const std::vector<gf_t>& y) {
  for (std::size_t i = 0; i + 1 < delta; ++i) {
    gf_t acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) acc ^= f.mul(f.exp(static_cast<long long>(i * j)), y[j]);
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

SampledY sample_sub_alternant_y(const FieldPtr& field, unsigned delta, std::uint64_t seed, std::uint64_t retry_limit) {
  const Field& f = *field;
  const std::size_t n = f.group_order();
  if (delta < 2 || delta > n - 1) throw UsageError("RS design distance must satisfy 2 <= delta <= n - 1");
  const std::size_t k = n - delta + 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, f.size() - 1);
  std::vector<gf_t> poly(k), y(n);
  for (std::uint64_t attempt = 1; attempt <= retry_limit; ++attempt) {
    for (auto& c : poly) c = static_cast<gf_t>(coef(rng));
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      const gf_t x = f.exp(static_cast<long long>(j));
      gf_t acc = 0;
      for (std::size_t i = k; i-- > 0;) acc = f.mul(acc, x) ^ poly[i];
      y[j] = f.mul(x, acc);
      ok = y[j] != 0;
    }
    if (ok) return {y, attempt};
  }
  throw SearchFailure("no all-nonzero RS(" + std::to_string(n) + ", " + std::to_string(delta) + ") codeword in " +
                      std::to_string(retry_limit) + " draws");
}

SubAlternantSpec::SubAlternantSpec(FieldPtr field, unsigned delta, std::vector<gf_t> y, std::size_t r)
    : spec_{field, full_group_locators(*field), std::move(y), r}, delta_(delta) {
  spec_.validate();
  const std::size_t n = field->group_order();
  if (delta < 2 || delta > n - 1) throw UsageError("RS design distance must satisfy 2 <= delta <= n - 1");
  if (!in_rs(*field, delta, spec_.y)) throw UsageError("multiplier vector is not a codeword of RS(n, delta)");
}

SubAlternantSpec SubAlternantSpec::sampled(FieldPtr field, unsigned delta, std::size_t r, std::uint64_t seed) {
  SampledY s = sample_sub_alternant_y(field, delta, seed);
  SubAlternantSpec spec(std::move(field), delta, std::move(s.y), r);
  spec.attempts_ = s.attempts;
  return spec;
}

bool SubAlternantSpec::in_asymptotic_regime() const noexcept {
  const std::size_t n = spec_.a.size();
  return 2 * spec_.r > delta_ && spec_.r < delta_ && 2 * spec_.r < n;
}

LinearCode sub_alternant_code(const SubAlternantSpec& spec) {
  const LinearCode c = alternant_code(spec.alternant());
  if (spec.all_ones_guaranteed() && !c.contains(BitVector::ones(c.n()))) {
    throw InternalError("all-ones word missing from a sub-alternant code with r < delta");
  }
  return c.relabeled("sub-alternant m=" + std::to_string(spec.alternant().field->m()) +
                     " delta=" + std::to_string(spec.delta()) + " r=" + std::to_string(spec.r()));
}

}  // namespace gaqc

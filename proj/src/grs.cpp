#include "gaqc/grs.hpp"

#include <algorithm>

#include "gaqc/errors.hpp"

namespace gaqc {

std::vector<gf_t> full_group_locators(const Field& f) {
  std::vector<gf_t> a(f.group_order());
  for (std::uint32_t j = 0; j < f.group_order(); ++j) a[j] = f.exp(j);
  return a;
}

MatrixExt rs_parity_matrix(const RsSpec& spec) {
  const Field& f = *spec.field;
  const std::size_t n = spec.n();
  if (spec.delta < 2 || spec.delta > n - 1) throw UsageError("RS design distance must satisfy 2 <= delta <= n - 1");
  MatrixExt h(spec.field, spec.delta - 1, n);
  for (std::size_t i = 0; i + 1 < spec.delta; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = f.exp(static_cast<long long>(i * j));
  }
  return h;
}

GrsSpec::GrsSpec(FieldPtr field, std::vector<gf_t> a, std::vector<gf_t> v, std::size_t k)
    : field_(std::move(field)), a_(std::move(a)), v_(std::move(v)), k_(k), cache_(std::make_shared<Cache>()) {
  if (a_.size() != v_.size()) throw UsageError("GRS locators and multipliers differ in length");
  if (a_.size() > field_->size()) throw UsageError("more GRS locators than field elements");
  if (k_ < 1 || k_ + 1 > a_.size()) throw UsageError("GRS dimension must satisfy 1 <= k <= n - 1");
  std::vector<bool> seen(field_->size(), false);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!field_->contains(a_[i]) || !field_->contains(v_[i])) throw UsageError("GRS entry outside the field");
    if (seen[a_[i]]) throw UsageError("repeated GRS locator");
    seen[a_[i]] = true;
    if (v_[i] == 0) throw UsageError("zero GRS multiplier");
  }
}

const std::vector<gf_t>& GrsSpec::y() const {
  std::call_once(cache_->once, [this] {
    const Field& f = *field_;
    std::vector<gf_t> y(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      gf_t prod = 1;
      for (std::size_t j = 0; j < a_.size(); ++j) {
        if (j != i) prod = f.mul(prod, a_[i] ^ a_[j]);
      }
      y[i] = f.inv(f.mul(prod, v_[i]));
    }
    cache_->y = std::move(y);
  });
  return cache_->y;
}

namespace {

MatrixExt vandermonde(const FieldPtr& field, const std::vector<gf_t>& a, const std::vector<gf_t>& scale, std::size_t rows) {
  const Field& f = *field;
  MatrixExt m(field, rows, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    gf_t x = scale[j];
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, j) = x;
      x = f.mul(x, a[j]);
    }
  }
  return m;
}

}  // namespace

MatrixExt grs_generator(const GrsSpec& spec) { return vandermonde(spec.field(), spec.a(), spec.v(), spec.k()); }

GrsSpec grs_dual(const GrsSpec& spec) { return GrsSpec(spec.field(), spec.a(), spec.y(), spec.n() - spec.k()); }

MatrixExt grs_parity_matrix(const GrsSpec& spec) {
  return vandermonde(spec.field(), spec.a(), spec.y(), spec.n() - spec.k());
}

GrsSpec rs_as_grs(const RsSpec& spec) {
  if (spec.delta < 2 || spec.delta > spec.n() - 1) throw UsageError("RS design distance must satisfy 2 <= delta <= n - 1");
  auto a = full_group_locators(*spec.field);
  return GrsSpec(spec.field, a, a, spec.k());
}

LinearCode expanded_grs_code(const GrsSpec& spec, const Basis& basis) {
  const std::size_t m = static_cast<std::size_t>(spec.field()->m());
  const std::size_t d = spec.n() - spec.k() + 1;
  // A nonzero codeword has at least d nonzero symbols, hence binary weight >= d.
  return LinearCode::from_generator(expand_generator(grs_generator(spec), basis),
                                    "expanded GRS n=" + std::to_string(spec.n()) + " k=" + std::to_string(spec.k()) +
                                        " m=" + std::to_string(m),
                                    DistanceCert::bounds(d, DistanceCert::kUnbounded, CertMethod::design_bound));
}

}  // namespace gaqc

#include "gaqc/field.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <functional>
#include <numeric>

#include "json.hpp"

#include "gaqc/errors.hpp"

namespace gaqc {

namespace {

constexpr std::array<std::uint32_t, 13> kDefaultModuli = {
    0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053};

void check_degree(int m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw UsageError("extension degree m=" + std::to_string(m) + " outside 2..12");
  }
}

int degree_gf2(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod_gf2(std::uint64_t a, std::uint64_t b) {
  const int db = degree_gf2(b);
  for (int da = degree_gf2(a); da >= db; da = degree_gf2(a)) a ^= b << (da - db);
  return a;
}

std::string hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%02X", v);
  return buf;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly, int m) {
  if (degree_gf2(poly) != m || (poly & 1u) == 0) return false;
  // Trial division by every polynomial of degree 1..m/2.
  for (std::uint64_t d = 2; degree_gf2(d) <= m / 2; ++d) {
    if (mod_gf2(poly, d) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(int m) {
  check_degree(m);
  return kDefaultModuli[m];
}

std::vector<std::uint32_t> primitive_moduli(int m) {
  check_degree(m);
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = (1u << m) + 1; p < (2u << m); p += 2) {
    if (!is_irreducible_gf2(p, m)) continue;
    Field f(m, p);
    if (f.is_primitive(2)) out.push_back(p);
  }
  return out;
}

Field::Field(int m) : Field(m, default_modulus(m)) {}

Field::Field(int m, std::uint32_t modulus, std::optional<gf_t> alpha)
    : m_(m), modulus_(modulus), alpha_(0) {
  check_degree(m);
  if (!is_irreducible_gf2(modulus, m)) {
    throw UsageError("modulus " + hex(modulus) + " is not irreducible of degree " + std::to_string(m));
  }
  auto slow_order = [&](gf_t a) {
    unsigned e = 1;
    for (gf_t cur = a; cur != 1; cur = mul_slow(cur, a)) ++e;
    return e;
  };
  if (alpha) {
    if (*alpha == 0 || *alpha >= size() || slow_order(*alpha) != group_order()) {
      throw UsageError("alpha " + hex(*alpha) + " is not a primitive element");
    }
    alpha_ = *alpha;
  } else {
    for (gf_t a = 2; a < size(); ++a) {
      if (slow_order(a) == group_order()) {
        alpha_ = a;
        break;
      }
    }
  }
  build_tables();
}

void Field::build_tables() {
  const std::uint32_t n = group_order();
  exp_.assign(2 * n, 0);
  log_.assign(size(), 0);
  gf_t cur = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, alpha_);
  }
  trace_.assign(size(), 0);
  for (std::uint32_t a = 0; a < size(); ++a) {
    gf_t acc = 0;
    gf_t p = static_cast<gf_t>(a);
    for (int i = 0; i < m_; ++i) {
      acc ^= p;
      p = mul_slow(p, p);
    }
    // trace lands in GF(2)
    trace_[a] = static_cast<std::uint8_t>(acc & 1u);
  }
}

gf_t Field::mul_slow(gf_t a, gf_t b) const noexcept {
  std::uint32_t r = 0;
  std::uint32_t x = a;
  for (std::uint32_t y = b; y != 0; y >>= 1) {
    if (y & 1u) r ^= x;
    x <<= 1;
    if (x >> m_ & 1u) x ^= modulus_;
  }
  return static_cast<gf_t>(r);
}

gf_t Field::inv(gf_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return exp_[(group_order() - log_[a]) % group_order()];
}

gf_t Field::div(gf_t a, gf_t b) const { return mul(a, inv(b)); }

gf_t Field::exp(long long e) const noexcept {
  const long long n = group_order();
  long long r = e % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

gf_t Field::pow(gf_t a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw DomainError("negative power of zero");
    return 0;
  }
  const long long n = group_order();
  long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
  return exp(r);
}

unsigned Field::log(gf_t a) const {
  if (a == 0) throw DomainError("logarithm of zero");
  return log_[a];
}

unsigned Field::element_order(gf_t a) const {
  if (a == 0) throw DomainError("order of zero");
  const unsigned n = group_order();
  return n / std::gcd(n, log_[a]);
}

bool Field::is_primitive(gf_t a) const { return a != 0 && element_order(a) == group_order(); }

std::string Field::to_json() const {
  nlohmann::json j{{"m", m_}, {"modulus", hex(modulus_)}, {"alpha", hex(alpha_)}};
  return j.dump();
}

FieldPtr make_field(int m) { return std::make_shared<const Field>(m); }

FieldPtr make_field(int m, std::uint32_t modulus, std::optional<gf_t> alpha) {
  return std::make_shared<const Field>(m, modulus, alpha);
}

FieldPtr field_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("field spec: ") + e.what());
  }
  auto parse_hex = [&](const char* key) -> std::uint32_t {
    if (!j.contains(key)) throw UsageError(std::string("field spec missing ") + key);
    const auto& v = j.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint32_t>();
    return static_cast<std::uint32_t>(std::stoul(v.get<std::string>(), nullptr, 16));
  };
  if (!j.contains("m")) throw UsageError("field spec missing m");
  const int m = j.at("m").get<int>();
  const std::uint32_t modulus = j.contains("modulus") ? parse_hex("modulus") : default_modulus(m);
  std::optional<gf_t> alpha;
  if (j.contains("alpha")) alpha = static_cast<gf_t>(parse_hex("alpha"));
  return make_field(m, modulus, alpha);
}

// ----------------------------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, gf_t bits) : field_(std::move(field)), bits_(bits) {
  if (!field_) throw UsageError("field element without a field");
  if (!field_->contains(bits)) throw UsageError("element bits exceed 2^m");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw UsageError("field elements belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, Field::add(bits_, o.bits_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(bits_, o.bits_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(bits_, o.bits_)};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(bits_)}; }

FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(bits_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return bits_ == o.bits_;
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement gf_inv(const FieldElement& a) { return a.inverse(); }
int trace(const FieldElement& a) { return a.field()->trace(a.bits()); }
unsigned element_order(const FieldElement& a) { return a.field()->element_order(a.bits()); }
bool is_primitive(const FieldElement& a) { return a.field()->is_primitive(a.bits()); }

// ----------------------------------------------------------------------------------------------

Basis::Basis(FieldPtr field, std::vector<gf_t> elements)
    : field_(std::move(field)), elements_(std::move(elements)) {
  const int m = field_->m();
  if (static_cast<int>(elements_.size()) != m) {
    throw UsageError("basis needs exactly m = " + std::to_string(m) + " elements");
  }
  // Gram matrix of the trace form, rows as bit masks, augmented with the identity.
  std::vector<std::uint32_t> gram(m), invm(m);
  for (int i = 0; i < m; ++i) {
    if (!field_->contains(elements_[i])) throw UsageError("basis element outside the field");
    invm[i] = 1u << i;
    for (int j = 0; j < m; ++j) {
      gram[i] |= static_cast<std::uint32_t>(field_->trace(field_->mul(elements_[i], elements_[j]))) << j;
    }
  }
  // The trace form is nondegenerate, so the Gram matrix is invertible iff the elements are independent.
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r) {
      if (gram[r] >> col & 1u) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw UsageError("basis elements are linearly dependent over GF(2)");
    std::swap(gram[col], gram[piv]);
    std::swap(invm[col], invm[piv]);
    for (int r = 0; r < m; ++r) {
      if (r != col && (gram[r] >> col & 1u)) {
        gram[r] ^= gram[col];
        invm[r] ^= invm[col];
      }
    }
  }
  dual_.assign(m, 0);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      if (invm[j] >> k & 1u) dual_[j] ^= elements_[k];
    }
  }
  coords_.assign(field_->size(), 0);
  for (std::uint32_t x = 0; x < field_->size(); ++x) {
    std::uint32_t c = 0;
    for (int i = 0; i < m; ++i) {
      c |= static_cast<std::uint32_t>(field_->trace(field_->mul(static_cast<gf_t>(x), dual_[i]))) << i;
    }
    coords_[x] = c;
  }
}

Basis Basis::polynomial(FieldPtr field) {
  std::vector<gf_t> e(field->m());
  for (int i = 0; i < field->m(); ++i) e[i] = static_cast<gf_t>(1u << i);
  return Basis(std::move(field), std::move(e));
}

gf_t Basis::combine(std::uint32_t coords) const noexcept {
  gf_t x = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (coords >> i & 1u) x ^= elements_[i];
  }
  return x;
}

std::vector<gf_t> find_self_dual_basis(const Field& field) {
  const int m = field.m();
  // Tr(b^2) = Tr(b), so every candidate must have trace one.
  std::vector<gf_t> candidates;
  for (std::uint32_t x = 1; x < field.size(); ++x) {
    if (field.trace(static_cast<gf_t>(x)) == 1) candidates.push_back(static_cast<gf_t>(x));
  }
  std::vector<gf_t> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == m) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const gf_t c = candidates[i];
      bool orthogonal = true;
      for (gf_t b : chosen) {
        if (field.trace(field.mul(b, c)) != 0) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      chosen.push_back(c);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0)) throw InternalError("self-dual basis search exhausted for m=" + std::to_string(m));
  return chosen;
}

}  // namespace gaqc

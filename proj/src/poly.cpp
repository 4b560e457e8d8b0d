#include "gaqc/poly.hpp"

#include <cctype>
#include <sstream>

#include "gaqc/errors.hpp"

namespace gaqc {

Poly::Poly(FieldPtr field, std::vector<gf_t> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (gf_t c : coeffs_) {
    if (!field_->contains(c)) throw UsageError("polynomial coefficient outside the field");
  }
  trim();
}

Poly Poly::constant(FieldPtr field, gf_t c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, unsigned k, gf_t c) {
  std::vector<gf_t> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::linear(FieldPtr field, gf_t root) { return Poly(std::move(field), {root, 1}); }

Poly Poly::from_roots(FieldPtr field, const std::vector<gf_t>& roots) {
  Poly p = constant(field, 1);
  for (gf_t r : roots) p = p * linear(field, r);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) throw UsageError("polynomials over different fields");
}

gf_t Poly::eval(gf_t x) const noexcept {
  gf_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->mul(acc, x) ^ *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<gf_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] ^= coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] ^= o.coeffs_[i];
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<gf_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] ^= field_->mul(coeffs_[i], o.coeffs_[j]);
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(gf_t c) const {
  std::vector<gf_t> r(coeffs_);
  for (auto& x : r) x = field_->mul(x, c);
  return Poly(field_, std::move(r));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

Poly Poly::derivative() const {
  std::vector<gf_t> r;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back((i & 1u) ? coeffs_[i] : gf_t{0});
  return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<gf_t> rem(coeffs_);
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(field_), *this};
  std::vector<gf_t> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  const gf_t lead_inv = field_->inv(divisor.leading());
  for (int i = degree(); i >= dd; --i) {
    const gf_t c = rem[i];
    if (c == 0) continue;
    const gf_t q = field_->mul(c, lead_inv);
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] ^= field_->mul(q, divisor.coeffs_[j]);
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const gf_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    std::string coef;
    if (c != 1 || i == 0) {
      if (c == 1) {
        coef = "1";
      } else {
        const unsigned l = field_->log(c);
        coef = l == 1 ? "a" : "a^" + std::to_string(l);
      }
    }
    os << coef;
    if (i > 0) {
      if (!coef.empty()) os << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool poly_divides(const Poly& f, const Poly& g) {
  if (f.is_zero()) throw DomainError("divisibility by the zero polynomial");
  return g.mod(f).is_zero();
}

std::vector<gf_t> poly_roots(const Poly& p) {
  std::vector<gf_t> out;
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  for (std::uint32_t x = 0; x < p.field()->size(); ++x) {
    if (p.eval(static_cast<gf_t>(x)) == 0) out.push_back(static_cast<gf_t>(x));
  }
  return out;
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  const Poly d = p.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(p, d).degree() == 0;
}

// ----------------------------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("polynomial '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  unsigned optional_exponent() { return accept('^') ? number() : 1u; }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+') || accept('-')) {
        acc = acc + term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner.pow(optional_exponent());
    }
    if (c == 'z' || c == 'x') {
      ++pos_;
      return Poly::monomial(field_, optional_exponent());
    }
    if (c == 'a') {
      ++pos_;
      return Poly::constant(field_, field_->exp(optional_exponent()));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("integer constants other than 0 and 1 are not field elements");
      }
      return Poly::constant(field_, static_cast<gf_t>(c - '0'));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const FieldPtr& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) { return PolyParser(field, text).parse(); }

}  // namespace gaqc

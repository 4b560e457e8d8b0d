#include "gaqc/goppa.hpp"

#include <algorithm>

#include "gaqc/errors.hpp"

namespace gaqc {

LocatorMode parse_locator_mode(const std::string& s) {
  if (s == "all") return LocatorMode::all;
  if (s == "nonroots") return LocatorMode::nonroots;
  if (s == "nonzero-nonroots") return LocatorMode::nonzero_nonroots;
  throw UsageError("unknown locator mode '" + s + "' (all, nonroots, nonzero-nonroots)");
}

std::string to_string(LocatorMode m) {
  switch (m) {
    case LocatorMode::all: return "all";
    case LocatorMode::nonroots: return "nonroots";
    case LocatorMode::nonzero_nonroots: return "nonzero-nonroots";
  }
  return "?";
}

std::vector<gf_t> default_locators(const Poly& g, LocatorMode mode) {
  const Field& f = *g.field();
  std::vector<gf_t> order;
  order.reserve(f.size());
  if (mode != LocatorMode::nonzero_nonroots) order.push_back(0);
  for (std::uint32_t i = 0; i < f.group_order(); ++i) order.push_back(f.exp(i));
  std::vector<gf_t> out;
  for (gf_t x : order) {
    if (g.eval(x) != 0) {
      out.push_back(x);
    } else if (mode == LocatorMode::all) {
      throw UsageError("locator mode 'all' impossible: G has the root " + std::to_string(x));
    }
  }
  return out;
}

GoppaSpec::GoppaSpec(Poly g_, std::vector<gf_t> locators_) : g(std::move(g_)), locators(std::move(locators_)) {
  if (g.degree() < 1) throw UsageError("Goppa polynomial must have degree >= 1");
  if (!g.is_monic()) throw UsageError("Goppa polynomial must be monic");
  if (locators.empty()) throw UsageError("empty location set");
  std::vector<bool> seen(g.field()->size(), false);
  for (gf_t x : locators) {
    if (!g.field()->contains(x)) throw UsageError("locator outside the field");
    if (seen[x]) throw UsageError("repeated locator");
    seen[x] = true;
    if (g.eval(x) == 0) throw UsageError("locator is a root of the Goppa polynomial");
  }
}

MatrixExt goppa_parity(const GoppaSpec& spec) {
  const Field& f = *spec.field();
  MatrixExt h(spec.field(), spec.t(), spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const gf_t a = spec.locators[i];
    gf_t x = f.inv(spec.g.eval(a));
    for (std::size_t j = 0; j < spec.t(); ++j) {
      h(j, i) = x;
      x = f.mul(x, a);
    }
  }
  return h;
}

MatrixExt goppa_parity_residue(const GoppaSpec& spec) {
  const Field& f = *spec.field();
  const std::size_t t = spec.t();
  MatrixExt h(spec.field(), t, spec.n());
  std::vector<gf_t> q(t);
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const gf_t a = spec.locators[i];
    // Synthetic division of G(z) - G(a) by z - a.
    q[t - 1] = spec.g.coeff(t);
    for (std::size_t j = t - 1; j-- > 0;) q[j] = spec.g.coeff(j + 1) ^ f.mul(a, q[j + 1]);
    const gf_t s = f.inv(spec.g.eval(a));
    for (std::size_t j = 0; j < t; ++j) h(j, i) = f.mul(s, q[j]);
  }
  return h;
}

namespace {

std::string goppa_label(const GoppaSpec& spec) {
  return "goppa m=" + std::to_string(spec.field()->m()) + " G=" + spec.g.to_string() + " n=" + std::to_string(spec.n());
}

LinearCode goppa_from(const MatrixExt& h, const GoppaSpec& spec) {
  return LinearCode::from_parity(expand_to_binary(h, Basis::polynomial(spec.field())), goppa_label(spec),
                                 DistanceCert::bounds(spec.t() + 1, DistanceCert::kUnbounded, CertMethod::design_bound));
}

}  // namespace

LinearCode goppa_code(const GoppaSpec& spec) { return goppa_from(goppa_parity(spec), spec); }

LinearCode goppa_code_residue(const GoppaSpec& spec) { return goppa_from(goppa_parity_residue(spec), spec); }

BoostResult squarefree_boost(const GoppaSpec& spec, const LinearCode& code) {
  BoostResult out{false, code, ""};
  if (!is_squarefree(spec.g)) {
    out.diagnostic = "G is not square-free; no upgrade";
    return out;
  }
  if (code.k() == 0) {
    out.diagnostic = "zero code; no distance to upgrade";
    return out;
  }
  const LinearCode sq = goppa_code(GoppaSpec(spec.g * spec.g, spec.locators));
  if (sq.k() != code.k() || !is_subcode(sq, code)) {
    out.diagnostic = "Gamma(L, G^2) has dimension " + std::to_string(sq.k()) + " != " + std::to_string(code.k()) +
                     "; no upgrade";
    return out;
  }
  const std::size_t d = 2 * spec.t() + 1;
  out.code = code.with_bound(code.bound().intersect(DistanceCert::bounds(d, code.n(), CertMethod::design_bound)));
  out.applied = true;
  out.diagnostic = "Gamma(L, G) = Gamma(L, G^2) verified; d >= " + std::to_string(d);
  return out;
}

NestingReport nested_goppa(const GoppaSpec& spec_g, const Poly& f) {
  NestingReport r;
  if (!poly_divides(f, spec_g.g)) return r;
  r.applicable = true;
  const LinearCode cg = goppa_code(spec_g);
  const LinearCode cf = goppa_code(GoppaSpec(f.monic(), spec_g.locators));
  r.contained = is_subcode(cg, cf);
  if (!r.contained) throw InternalError("F | G but Gamma(L, G) is not inside Gamma(L, F) for G = " + spec_g.g.to_string());
  return r;
}

int bezzateev_S(const Field& field, unsigned t) {
  const std::uint32_t q1 = field.group_order();
  if (t == 0 || q1 % t != 0) {
    throw UsageError("t = " + std::to_string(t) + " does not divide 2^m - 1 = " + std::to_string(q1));
  }
  const std::uint32_t l = q1 / t;
  gf_t s = 0;
  for (std::uint32_t mu = 1; mu < l; ++mu) s ^= field.inv(field.exp(static_cast<long long>(mu) * t) ^ 1);
  if (s > 1) throw InternalError("S = sum 1/(alpha^{mu t} + 1) lies outside {0, 1}");
  return s;
}

BezzateevVariant parse_bezzateev_variant(const std::string& s) {
  if (s == "base") return BezzateevVariant::base;
  if (s == "etc" || s == "extended") return BezzateevVariant::extended;
  if (s == "ptc" || s == "punctured") return BezzateevVariant::punctured;
  throw UsageError("unknown variant '" + s + "' (base, etc, ptc)");
}

std::string to_string(BezzateevVariant v) {
  switch (v) {
    case BezzateevVariant::base: return "base";
    case BezzateevVariant::extended: return "etc";
    case BezzateevVariant::punctured: return "ptc";
  }
  return "?";
}

BezzateevCode bezzateev_code(const BezzateevSpec& spec) {
  const Field& f = *spec.field;
  const int s = bezzateev_S(f, spec.t);
  const std::uint32_t l = f.group_order() / spec.t;
  if (spec.a == 0 || f.pow(spec.a, l) != 1) throw UsageError("A must be a nonzero t-th power");
  if (s == 0 && spec.variant != BezzateevVariant::punctured) {
    throw UsageError("S = 0 for t = " + std::to_string(spec.t) + ": only the punctured variant exists");
  }
  Poly g = Poly::monomial(spec.field, spec.t) + Poly::constant(spec.field, spec.a);
  GoppaSpec goppa(g, LocatorMode::nonroots);
  const LinearCode plain = goppa_code(goppa);
  BoostResult boost = squarefree_boost(goppa, plain);
  BezzateevCode out{s, goppa, boost.code, boost.code, std::nullopt, boost.applied};
  const BitVector ones = BitVector::ones(out.base.n());
  if (s == 1) {
    if (!out.base.contains(ones)) throw InternalError("S = 1 but the all-ones word is not in Gamma(N, z^t + A)");
    if (spec.variant == BezzateevVariant::extended) {
      out.code = extend(out.base);
    } else if (spec.variant == BezzateevVariant::punctured) {
      out.punctured_at = out.base.n() - 1;
      out.code = puncture(out.base, *out.punctured_at);
    }
  } else {
    // The locator 0 comes first in the default order.
    out.punctured_at = 0;
    out.code = puncture(out.base, 0);
    if (!out.code.contains(BitVector::ones(out.code.n()))) {
      throw InternalError("S = 0 but the all-ones word is not in the punctured Gamma(N, z^t + A)");
    }
  }
  out.code = out.code.relabeled("goppa z^t+A m=" + std::to_string(f.m()) + " t=" + std::to_string(spec.t) +
                                " S=" + std::to_string(s) + " " + to_string(spec.variant));
  return out;
}

long long dimension_lower_bound(const GoppaSpec& spec) {
  return static_cast<long long>(spec.n()) - static_cast<long long>(spec.field()->m()) * static_cast<long long>(spec.t());
}

Example44Report find_example_4_4(bool sweep_moduli, const Budget& budget) {
  static constexpr int kExponents[] = {9, 12, 30, 34, 42, 43, 50, 54};
  Example44Report rep;
  auto is_hit = [](const Example44Realization& r) {
    return r.n == 55 && r.k == 16 && r.d.is_exact() && r.d.lower == 19;
  };
  auto measure = [&](const GoppaSpec& spec, Example44Realization r) {
    const LinearCode c = squarefree_boost(spec, goppa_code(spec)).code;
    r.n = c.n();
    r.k = c.k();
    r.d = c.k() > 0 ? min_distance_exact(c, budget) : c.bound();
    return r;
  };
  auto for_each_alpha = [](std::uint32_t modulus, auto&& body) {
    const Field probe(6, modulus);
    for (std::uint32_t x = 1; x < probe.size(); ++x) {
      if (!probe.is_primitive(static_cast<gf_t>(x))) continue;
      const FieldPtr f = make_field(6, modulus, static_cast<gf_t>(x));
      std::vector<gf_t> roots;
      for (int e : kExponents) roots.push_back(f->exp(e));
      body(f, Poly::from_roots(f, roots));
    }
  };
  auto stage = [&](std::uint32_t modulus) {
    for_each_alpha(modulus, [&](const FieldPtr& f, const Poly& g) {
      const Example44Realization r =
          measure(GoppaSpec(g, LocatorMode::nonzero_nonroots), {modulus, f->alpha(), std::nullopt, 0, 0, {}});
      ++rep.candidates;
      rep.all.push_back(r);
      if (is_hit(r)) rep.hits.push_back(r);
    });
  };
  stage(default_modulus(6));
  if (sweep_moduli || rep.hits.empty()) {
    rep.swept_moduli = true;
    for (std::uint32_t p : primitive_moduli(6)) {
      if (p != default_modulus(6)) stage(p);
    }
  }
  if (rep.hits.empty()) {
    for_each_alpha(default_modulus(6), [&](const FieldPtr& f, const Poly& g) {
      const std::vector<gf_t> all = default_locators(g, LocatorMode::nonroots);
      for (std::size_t drop = 0; drop < all.size(); ++drop) {
        if (all[drop] == 0) continue;
        std::vector<gf_t> l = all;
        l.erase(l.begin() + static_cast<std::ptrdiff_t>(drop));
        const GoppaSpec spec(g, l);
        if (goppa_code(spec).k() != 16) continue;
        const Example44Realization r =
            measure(spec, {default_modulus(6), f->alpha(), f->log(all[drop]), 0, 0, {}});
        if (is_hit(r)) rep.drop_one_hits.push_back(r);
      }
    });
  }
  return rep;
}

}  // namespace gaqc

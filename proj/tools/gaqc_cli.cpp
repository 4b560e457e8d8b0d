#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gaqc/errors.hpp"
#include "gaqc/reproduce.hpp"

using namespace gaqc;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

struct Common {
  bool json = false;
  std::string modulus;
  std::string out;
  double budget_seconds = 600;
};

std::uint32_t parse_hex(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used, 0);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + s);
  }
  if (used != s.size()) throw UsageError("not a number: " + s);
  return static_cast<std::uint32_t>(v);
}

FieldPtr field_of(int m, const Common& c) {
  if (c.modulus.empty()) return make_field(m);
  return make_field(m, parse_hex(c.modulus));
}

Budget budget_of(const Common& c) { return Budget::with_seconds(c.budget_seconds); }

/// Output sink: --out file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string bracket(const LinearCode& c, const DistanceCert& d) {
  std::ostringstream s;
  s << '[' << c.n() << ',' << c.k() << ',';
  if (d.is_exact())
    s << d.lower;
  else
    s << d.lower << ".." << d.upper;
  s << ']';
  return s.str();
}

std::string range(const DistanceCert& d) {
  return d.is_exact() ? std::to_string(d.lower) : std::to_string(d.lower) + ".." + std::to_string(d.upper);
}

std::string aqc_line(const AqcReport& r) {
  return "[[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + range(r.dz) + "/" + range(r.dx) +
         "]] pure=" + to_string(r.pure);
}

void emit(Sink& sink, const Common& c, const Json& j, const std::string& text) {
  if (c.json)
    sink.os() << j.dump() << '\n';
  else
    sink.os() << text << '\n';
}

LinearCode read_code(const std::string& path, const std::string& form) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  MatrixF2 m = MatrixF2::from_text(buf.str());
  if (m.rows() == 0) throw UsageError(path + ": empty matrix");
  if (form == "parity") return LinearCode::from_parity(m, path);
  return LinearCode::from_generator(m, path);
}

// ---------------------------------------------------------------------------------------------

int run_goppa_build(const Common& c, int m, const std::string& poly, const std::string& locators,
                    const std::string& variant, std::optional<std::size_t> position) {
  FieldPtr f = field_of(m, c);
  GoppaSpec spec(parse_poly(f, poly), parse_locator_mode(locators));
  LinearCode base = goppa_code(spec);
  BoostResult boost = squarefree_boost(spec, base);
  if (boost.applied) base = boost.code;
  DerivedOp op = parse_derived_op(variant);
  if (position && *position >= spec.n()) throw UsageError("--position outside the code length");
  LinearCode code = apply_op(op, base, position);
  DistanceCert d = min_distance_exact(code, budget_of(c));

  Json j = code_json(code, d);
  j["field"] = field_json(*f);
  j["G"] = spec.g.to_string();
  j["locators"] = to_string(parse_locator_mode(locators));
  j["variant"] = to_string(op);
  j["dimension_lower_bound"] = dimension_lower_bound(spec);
  j["squarefree_boost"] = boost.applied;
  Sink sink(c.out);
  emit(sink, c, j, code.label() + " " + to_string(op) + " " + bracket(code, d) + " (" + to_string(d.method) + ")");
  return kOk;
}

Json realization_json(const Example44Realization& r) {
  Json j = {{"modulus", hex(r.modulus)}, {"alpha", hex(r.alpha)}, {"n", r.n}, {"k", r.k}, {"d", to_json(r.d)}};
  if (r.dropped_exponent) j["dropped"] = "a^" + std::to_string(*r.dropped_exponent);
  return j;
}

int run_example44(const Common& c, bool sweep) {
  Example44Report rep = find_example_4_4(sweep, budget_of(c));
  Json hits = Json::array(), drops = Json::array();
  for (const auto& r : rep.hits) hits.push_back(realization_json(r));
  for (const auto& r : rep.drop_one_hits) drops.push_back(realization_json(r));
  std::string outcome;
  if (!rep.hits.empty())
    outcome = "found";
  else if (!rep.drop_one_hits.empty())
    outcome = "not found with L = nonzero non-roots; found with one nonzero non-root removed instead of 0";
  else
    outcome = "not found";
  Json j = {{"target", "[55,16,19]"},
            {"candidates", rep.candidates},
            {"swept_moduli", rep.swept_moduli},
            {"outcome", outcome},
            {"realizations", hits},
            {"drop_one_realizations", drops}};
  Json all = Json::array();
  for (const auto& r : rep.all) all.push_back(realization_json(r));
  j["examined"] = all;

  std::ostringstream s;
  s << "candidates " << rep.candidates << (rep.swept_moduli ? " (all primitive moduli)" : " (default modulus)")
    << "\noutcome: " << outcome << '\n';
  for (const auto& r : rep.hits) s << "  modulus " << hex(r.modulus) << " alpha " << hex(r.alpha) << '\n';
  for (const auto& r : rep.drop_one_hits)
    s << "  modulus " << hex(r.modulus) << " alpha " << hex(r.alpha) << " without a^" << *r.dropped_exponent << '\n';
  std::string text = s.str();
  text.pop_back();
  Sink sink(c.out);
  emit(sink, c, j, text);
  return kOk;
}

int run_grs(const Common& c, int m, std::size_t k, const std::string& mult, bool expand) {
  FieldPtr f = field_of(m, c);
  std::vector<gf_t> a = full_group_locators(*f);
  std::vector<gf_t> v = mult == "locators" ? a : std::vector<gf_t>(a.size(), 1);
  GrsSpec spec(f, a, v, k);
  Json j = {{"field", field_json(*f)}, {"n", spec.n()}, {"k", spec.k()}, {"d", spec.n() - spec.k() + 1},
            {"locators", hex_list(spec.a())}, {"multipliers", hex_list(spec.v())}, {"dual_multipliers", hex_list(spec.y())}};
  std::string text = "GRS [" + std::to_string(spec.n()) + "," + std::to_string(k) + "," +
                     std::to_string(spec.n() - k + 1) + "] over GF(2^" + std::to_string(m) + ")";
  if (expand) {
    LinearCode img = expanded_grs_code(spec, Basis(f, find_self_dual_basis(*f)));
    DistanceCert d = min_distance_exact(img, budget_of(c));
    j["binary_image"] = code_json(img, d);
    text += "; binary image " + bracket(img, d);
  }
  Sink sink(c.out);
  emit(sink, c, j, text);
  return kOk;
}

int run_subalternant(const Common& c, int m, unsigned delta, std::size_t r, std::uint64_t seed) {
  FieldPtr f = field_of(m, c);
  SubAlternantSpec spec = SubAlternantSpec::sampled(f, delta, r, seed);
  LinearCode code = sub_alternant_code(spec);
  DistanceCert d = min_distance_exact(code, budget_of(c));
  Json j = code_json(code, d);
  j["field"] = field_json(*f);
  j["delta"] = delta;
  j["r"] = r;
  j["seed"] = seed;
  j["attempts"] = spec.attempts();
  j["all_ones_guaranteed"] = spec.all_ones_guaranteed();
  j["asymptotic_regime"] = spec.in_asymptotic_regime();
  j["y"] = hex_list(spec.alternant().y);
  Sink sink(c.out);
  emit(sink, c, j, code.label() + " " + bracket(code, d));
  return kOk;
}

int run_aqc_css(const Common& c, const std::string& p1, const std::string& p2, const std::string& form) {
  LinearCode c1 = read_code(p1, form), c2 = read_code(p2, form);
  AqcReport r = css_construct(c1, c2, budget_of(c));
  Sink sink(c.out);
  emit(sink, c, to_json(r), aqc_line(r));
  return kOk;
}

int run_aqc_bezzateev(const Common& c, int m, unsigned t, const std::string& variant, const std::string& a) {
  FieldPtr f = field_of(m, c);
  BezzateevSpec spec{f, t, a.empty() ? gf_t{1} : static_cast<gf_t>(parse_hex(a)), parse_bezzateev_variant(variant)};
  BezzateevAqc q = bezzateev_aqc(spec, budget_of(c));
  Json j = to_json(q.report);
  j["field"] = field_json(*f);
  j["t"] = t;
  j["variant"] = to_string(spec.variant);
  j["S"] = q.s;
  j["goppa_dim"] = q.goppa_dim;
  j["dimension_lower_bound"] = q.lower_bound;
  j["boosted"] = q.boosted;
  if (q.punctured_at) j["punctured_at"] = *q.punctured_at;
  Sink sink(c.out);
  emit(sink, c, j, "S=" + std::to_string(q.s) + " " + aqc_line(q.report));
  return kOk;
}

int run_aqc_grs(const Common& c, int m, std::size_t k1, std::size_t k2) {
  FieldPtr f = field_of(m, c);
  ExpandedGrsAqc q = expanded_grs_aqc(f, k1, k2, budget_of(c));
  Json j = {{"field", field_json(*f)},
            {"extension", {{"n", q.big_n}, {"k", q.ext_k}, {"dz", q.ext_dz}, {"dx", q.ext_dx}}},
            {"contained", q.contained},
            {"dual_is_image", q.dual_is_image},
            {"binary", to_json(q.binary)}};
  std::string text = "GF(2^" + std::to_string(m) + ") [[" + std::to_string(q.big_n) + "," + std::to_string(q.ext_k) +
                     "," + std::to_string(q.ext_dz) + "/" + std::to_string(q.ext_dx) + "]]; binary " +
                     aqc_line(q.binary);
  Sink sink(c.out);
  emit(sink, c, j, text);
  return kOk;
}

int run_aqc_subalternant(const Common& c, int m, unsigned delta, std::size_t r, std::uint64_t seed) {
  FieldPtr f = field_of(m, c);
  SubAlternantAqc q = sub_alternant_aqc(f, delta, r, seed, budget_of(c));
  Json j = to_json(q.report);
  j["y"] = hex_list(q.spec.alternant().y);
  Sink sink(c.out);
  emit(sink, c, j, aqc_line(q.report));
  return kOk;
}

int run_gv(const Common& c, double step, double dx, const std::string& surface) {
  std::vector<GvRow> rows = gv_curves(step, dx);
  if (!surface.empty()) {
    std::ofstream s(surface);
    if (!s) throw UsageError("cannot open " + surface + " for writing");
    s << gv_surface_csv(gv_surface(step < 0.01 ? 0.01 : step));
  }
  Sink sink(c.out);
  if (c.json) {
    for (const auto& r : rows)
      sink.os() << Json{{"delta", r.delta}, {"R_classical", r.classical}, {"R_quantum_sym", r.quantum_sym},
                        {"R_aqc_dx_fixed", r.aqc_dx_fixed}}.dump()
                << '\n';
  } else {
    sink.os() << gv_csv(rows);
  }
  return kOk;
}

int run_reproduce(const Common& c, int table, const std::string& rows, std::optional<std::size_t> position,
                  bool no_sweep, bool no_pairings) {
  ReproduceOptions opt;
  opt.budget_seconds = c.budget_seconds;
  if (!c.modulus.empty()) opt.modulus = parse_hex(c.modulus);
  opt.position = position;
  opt.sweep_positions = !no_sweep;
  opt.try_pairings = !no_pairings;

  std::vector<ReproductionRow> out;
  if (table == 1) {
    auto sel = select_table1(rows);
    Sink sink(c.out);
    bool mismatch = false, infeasible = false;
    for (const auto& fx : sel) {
      ReproductionRow r = reproduce_table1(fx, opt);
      mismatch |= r.verdict == Verdict::mismatch;
      infeasible |= r.verdict == Verdict::infeasible;
      emit(sink, c, to_json(r), "table 1 row " + r.id + ": " + to_string(r.verdict) + " " + r.measured.value("aqc", ""));
      sink.os().flush();
    }
    return mismatch ? kMismatch : infeasible ? kBudget : kOk;
  }
  if (table != 2) throw UsageError("--table must be 1 or 2");
  auto sel = select_table2(rows);
  Sink sink(c.out);
  bool mismatch = false, infeasible = false;
  for (const auto& fx : sel) {
    ReproductionRow r = reproduce_table2(fx, opt);
    mismatch |= r.verdict == Verdict::mismatch;
    infeasible |= r.verdict == Verdict::infeasible;
    emit(sink, c, to_json(r), "table 2 " + r.id + ": " + to_string(r.verdict) + " " + r.measured.value("aqc", ""));
    sink.os().flush();
  }
  return mismatch ? kMismatch : infeasible ? kBudget : kOk;
}

void add_common(CLI::App* app, Common& c, bool budget = true) {
  app->add_flag("--json", c.json, "Emit JSON lines");
  app->add_option("--field-modulus", c.modulus, "Field modulus, e.g. 0x43 (default: built-in table)");
  app->add_option("--out", c.out, "Write to this file instead of stdout");
  if (budget) app->add_option("--budget-seconds", c.budget_seconds, "Distance-search budget in seconds (0: none)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goppa / alternant asymmetric quantum code toolkit"};
  app.require_subcommand(1);
  Common c;
  std::function<int()> action;

  // goppa
  auto* goppa = app.add_subcommand("goppa", "Goppa codes");
  goppa->require_subcommand(1);
  int g_m = 0;
  std::string g_poly, g_loc = "nonroots", g_var = "base";
  std::optional<std::size_t> g_pos;
  auto* gb = goppa->add_subcommand("build", "Build Gamma(L, G) and certify its distance");
  gb->add_option("--m", g_m, "Field degree")->required()->check(CLI::Range(2, 12));
  gb->add_option("--poly", g_poly, "Goppa polynomial, e.g. \"z^9+1\"")->required();
  gb->add_option("--locators", g_loc, "all | nonroots | nonzero-nonroots");
  gb->add_option("--variant", g_var, "base | etc | ptc | stc | epc");
  gb->add_option("--position", g_pos, "Coordinate punctured or shortened (default: last)");
  add_common(gb, c);
  gb->callback([&] { action = [&] { return run_goppa_build(c, g_m, g_poly, g_loc, g_var, g_pos); }; });

  bool sweep = false;
  auto* ge = goppa->add_subcommand("example44", "Search field representations for the [55,16,19] code");
  ge->add_flag("--search-moduli", sweep, "Also try every primitive modulus of degree 6");
  add_common(ge, c);
  ge->callback([&] { action = [&] { return run_example44(c, sweep); }; });

  // grs
  int r_m = 0;
  std::size_t r_k = 0;
  std::string r_mult = "ones";
  bool r_expand = false;
  auto* grs = app.add_subcommand("grs", "Full-length GRS code over GF(2^m)");
  grs->add_option("--m", r_m, "Field degree")->required()->check(CLI::Range(2, 12));
  grs->add_option("--k", r_k, "Dimension")->required();
  grs->add_option("--multipliers", r_mult, "ones | locators (the latter is RS)")
      ->check(CLI::IsMember({"ones", "locators"}));
  grs->add_flag("--expand", r_expand, "Also build the binary image in a self-dual basis");
  add_common(grs, c);
  grs->callback([&] { action = [&] { return run_grs(c, r_m, r_k, r_mult, r_expand); }; });

  // subalternant
  int s_m = 0;
  unsigned s_delta = 0;
  std::size_t s_r = 0;
  std::uint64_t s_seed = 1;
  auto* sub = app.add_subcommand("subalternant", "Sampled sub-alternant code");
  sub->add_option("--m", s_m, "Field degree")->required()->check(CLI::Range(2, 12));
  sub->add_option("--delta", s_delta, "RS design distance")->required();
  sub->add_option("--r", s_r, "Alternant order")->required();
  sub->add_option("--seed", s_seed, "Sampling seed");
  add_common(sub, c);
  sub->callback([&] { action = [&] { return run_subalternant(c, s_m, s_delta, s_r, s_seed); }; });

  // aqc
  auto* aqc = app.add_subcommand("aqc", "Asymmetric quantum codes");
  aqc->require_subcommand(1);
  std::string a_c1, a_c2, a_form = "generator";
  auto* ac = aqc->add_subcommand("css", "CSS pair from two matrix files ('0'/'1' rows)");
  ac->add_option("--c1", a_c1, "C1 matrix file")->required()->check(CLI::ExistingFile);
  ac->add_option("--c2", a_c2, "C2 matrix file")->required()->check(CLI::ExistingFile);
  ac->add_option("--form", a_form, "generator | parity")->check(CLI::IsMember({"generator", "parity"}));
  add_common(ac, c);
  ac->callback([&] { action = [&] { return run_aqc_css(c, a_c1, a_c2, a_form); }; });

  int b_m = 0;
  unsigned b_t = 0;
  std::string b_var = "base", b_a;
  auto* ab = aqc->add_subcommand("bezzateev", "Gamma(N, z^t + A) with the even-weight code");
  ab->add_option("--m", b_m, "Field degree")->required()->check(CLI::Range(2, 12));
  ab->add_option("--t", b_t, "Degree t, dividing 2^m - 1")->required();
  ab->add_option("--variant", b_var, "base | extended | punctured");
  ab->add_option("--a", b_a, "Constant term A (hex, default 1)");
  add_common(ab, c);
  ab->callback([&] { action = [&] { return run_aqc_bezzateev(c, b_m, b_t, b_var, b_a); }; });

  int e_m = 0;
  std::size_t e_k1 = 0, e_k2 = 0;
  auto* ag = aqc->add_subcommand("grs", "Expanded GRS pair");
  ag->add_option("--m", e_m, "Field degree")->required()->check(CLI::Range(2, 12));
  ag->add_option("--k1", e_k1, "K1")->required();
  ag->add_option("--k2", e_k2, "K2")->required();
  add_common(ag, c);
  ag->callback([&] { action = [&] { return run_aqc_grs(c, e_m, e_k1, e_k2); }; });

  auto* as = aqc->add_subcommand("subalternant", "Sub-alternant code with the even-weight code");
  as->add_option("--m", s_m, "Field degree")->required()->check(CLI::Range(2, 12));
  as->add_option("--delta", s_delta, "RS design distance")->required();
  as->add_option("--r", s_r, "Alternant order")->required();
  as->add_option("--seed", s_seed, "Sampling seed");
  add_common(as, c);
  as->callback([&] { action = [&] { return run_aqc_subalternant(c, s_m, s_delta, s_r, s_seed); }; });

  // gv
  double v_step = 0.001, v_dx = 0;
  std::string v_surface;
  auto* gv = app.add_subcommand("gv", "Gilbert-Varshamov curves as CSV");
  gv->add_option("--step", v_step, "Grid step in delta");
  gv->add_option("--dx", v_dx, "Fixed relative dx for the asymmetric curve");
  gv->add_option("--surface", v_surface, "Also write the (dx, dz) rate surface CSV here");
  add_common(gv, c, false);
  gv->callback([&] { action = [&] { return run_gv(c, v_step, v_dx, v_surface); }; });

  // reproduce
  int p_table = 1;
  std::string p_rows = "all";
  std::optional<std::size_t> p_pos;
  bool p_no_sweep = false, p_no_pairings = false;
  auto* rep = app.add_subcommand("reproduce", "Rebuild table rows and compare with the printed values");
  rep->add_option("--table", p_table, "1 (nested Goppa) or 2 (d_x = 2)")->required();
  rep->add_option("--rows", p_rows, "all, or ids: \"1,4,9-13\" (table 1), \"m6,m8-t17\" (table 2)");
  rep->add_option("--position", p_pos, "Puncture/shorten coordinate (default: last)");
  rep->add_flag("--no-sweep", p_no_sweep, "Do not search other coordinates on a contradiction");
  rep->add_flag("--no-pairings", p_no_pairings, "Do not try other operations on inconsistent rows");
  add_common(rep, c);
  rep->callback([&] { action = [&] { return run_reproduce(c, p_table, p_rows, p_pos, p_no_sweep, p_no_pairings); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << '\n';
    return kBudget;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

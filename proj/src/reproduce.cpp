#include "gaqc/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "gaqc/errors.hpp"

namespace gaqc {

DerivedOp parse_derived_op(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
  if (l == "base" || l == "none" || l.empty()) return DerivedOp::none;
  if (l == "etc") return DerivedOp::etc;
  if (l == "ptc") return DerivedOp::ptc;
  if (l == "stc") return DerivedOp::stc;
  if (l == "epc") return DerivedOp::epc;
  throw UsageError("unknown derived-code operation '" + s + "' (base|etc|ptc|stc|epc)");
}

std::string to_string(DerivedOp op) {
  switch (op) {
    case DerivedOp::none: return "base";
    case DerivedOp::etc: return "ETC";
    case DerivedOp::ptc: return "PTC";
    case DerivedOp::stc: return "STC";
    case DerivedOp::epc: return "EPC";
  }
  return "?";
}

LinearCode apply_op(DerivedOp op, const LinearCode& c, std::optional<std::size_t> pos) {
  const std::size_t p = pos.value_or(c.n() - 1);
  switch (op) {
    case DerivedOp::none: return c;
    case DerivedOp::etc: return extend(c);
    case DerivedOp::ptc: return puncture(c, p);
    case DerivedOp::stc: return shorten(c, p);
    case DerivedOp::epc: return expurgate(c).code;
  }
  return c;
}

// ----------------------------------------------------------------------------------------------

const std::vector<Table1Fixture>& table1_fixtures() {
  using D = DerivedOp;
  constexpr auto none = std::nullopt;
  static const std::string g6 = "z^9+1", g8 = "z^17+1";
  static const std::string f1 = "(z-1)^6*(z^9+1)", f4 = "(z-1)^2*(z^9+1)";
  static const std::string f9 = "(z-1)^60*(z^17+1)", f14 = "(z^17+1)^5", f19 = "(z-1)^30*(z^17+1)";
  static const std::string swapped = "printed columns do not pair up: base length/dimension and dual/AQC entries disagree";
  static const std::vector<Table1Fixture> rows = {
      {1, 6, g6, f1, D::none, {55, 16, 19, none}, {55, 49, 3, none}, {55, 10, 19, 3}, ""},
      {2, 6, g6, f1, D::etc, {56, 16, 20, none}, {56, 50, 3, none}, {56, 10, 20, 3}, ""},
      {3, 6, g6, f1, D::ptc, {54, 16, 18, none}, {54, 48, 3, none}, {54, 10, 18, 3}, ""},
      {4, 6, g6, f4, D::none, {55, 16, 19, none}, {55, 45, 4, none}, {55, 6, 19, 4}, ""},
      {5, 6, g6, f4, D::epc, {55, 15, 20, none}, {55, 46, 3, 4}, {55, 6, 20, 3}, "dual printed 3(4)"},
      {6, 6, g6, f4, D::etc, {56, 16, 20, none}, {56, 46, 4, none}, {56, 6, 20, 4}, ""},
      {7, 6, g6, f4, D::stc, {54, 15, 19, none}, {54, 45, 3, 4}, {54, 6, 19, 3}, "dual printed 3(4)"},
      {8, 6, g6, f4, D::ptc, {54, 16, 18, none}, {54, 44, 4, none}, {54, 6, 18, 4}, ""},
      {9, 8, g8, f9, D::none, {239, 123, 35, none}, {239, 229, 4, none}, {239, 113, 35, 4}, ""},
      {10, 8, g8, f9, D::epc, {239, 122, 36, none}, {239, 230, 3, 4}, {239, 113, 36, 3}, "dual printed 3(4)"},
      {11, 8, g8, f9, D::etc, {240, 123, 36, none}, {240, 230, 4, none}, {240, 113, 36, 4}, ""},
      {12, 8, g8, f9, D::stc, {238, 122, 35, none}, {238, 229, 3, 4}, {238, 113, 35, 3}, "dual printed 3(4)"},
      {13, 8, g8, f9, D::ptc, {238, 123, 34, none}, {238, 228, 4, none}, {238, 113, 34, 4}, ""},
      {14, 8, g8, f14, D::none, {239, 123, 35, none}, {239, 218, 6, none}, {239, 102, 35, 6}, ""},
      {15, 8, g8, f14, D::epc, {239, 122, 36, none}, {239, 219, 5, 6}, {239, 102, 36, 5}, "dual printed 5(6)"},
      {16, 8, g8, f14, D::etc, {240, 123, 36, none}, {238, 217, 6, none}, {238, 102, 34, 6}, swapped},
      {17, 8, g8, f14, D::stc, {238, 122, 35, none}, {240, 219, 6, none}, {240, 102, 36, 6}, swapped},
      {18, 8, g8, f14, D::ptc, {238, 123, 34, none}, {238, 218, 5, 6}, {238, 102, 35, 5}, swapped + "; dual printed 5(6)"},
      {19, 8, g8, f19, D::none, {239, 123, 35, none}, {239, 208, 8, none}, {239, 92, 35, 8}, ""},
      {20, 8, g8, f19, D::epc, {239, 122, 36, none}, {239, 209, 7, 8}, {239, 92, 36, 7}, "dual printed 7(8)"},
      {21, 8, g8, f19, D::etc, {240, 123, 36, none}, {240, 209, 8, none}, {240, 92, 36, 8}, ""},
      {22, 8, g8, f19, D::stc, {238, 122, 35, none}, {238, 208, 7, 8}, {238, 92, 35, 7}, "dual printed 7(8)"},
      {23, 8, g8, f19, D::ptc, {238, 123, 34, none}, {238, 207, 8, none}, {238, 92, 34, 8}, ""},
  };
  return rows;
}

const std::vector<Table2Fixture>& table2_fixtures() {
  using D = DerivedOp;
  constexpr auto none = std::nullopt;
  static const std::vector<Table2Fixture> rows = {
      {"m6-t3", 6, 3, D::none, 0, 60, 43, 43, {60, 42, 6, 2}},
      {"m6-t7", 6, 7, D::none, 0, 56, 17, 15, {56, 16, 14, 2}},
      {"m6-t9", 6, 9, D::none, 1, 55, 16, 1, {55, 15, 19, 2}},
      {"m6-t9-etc", 6, 9, D::etc, none, 56, 16, none, {56, 15, 20, 2}},
      {"m6-t9-ptc", 6, 9, D::ptc, none, 54, 16, none, {54, 15, 18, 2}},
      {"m8-t3", 8, 3, D::none, 0, 252, 229, 229, {252, 228, 6, 2}},
      {"m8-t5", 8, 5, D::none, 1, 251, 211, 211, {251, 210, 11, 2}},
      {"m8-t5-etc", 8, 5, D::etc, none, 252, 211, none, {252, 210, 12, 2}},
      {"m8-t5-ptc", 8, 5, D::ptc, none, 250, 211, none, {250, 210, 10, 2}},
      {"m8-t15", 8, 15, D::none, 0, 240, 124, 121, {240, 123, 30, 2}},
      {"m8-t17", 8, 17, D::none, 1, 239, 123, 103, {239, 122, 35, 2}},
      {"m8-t17-etc", 8, 17, D::etc, none, 240, 123, none, {240, 122, 36, 2}},
      {"m8-t17-ptc", 8, 17, D::ptc, none, 238, 123, none, {238, 122, 34, 2}},
      {"m8-t51", 8, 51, D::none, 0, 204, 2, -203, {204, 1, 102, 2}},
      {"m9-t73", 9, 73, D::none, 1, 439, 58, -218, {439, 57, 147, 2}},
      {"m9-t73-etc", 9, 73, D::etc, none, 440, 58, none, {440, 57, 148, 2}},
      {"m9-t73-ptc", 9, 73, D::ptc, none, 438, 58, none, {438, 57, 146, 2}},
      {"m10-t31", 10, 31, D::none, 0, 992, 687, 683, {992, 686, 62, 2}},
      {"m10-t33", 10, 33, D::none, 1, 991, 686, 661, {991, 685, 67, 2}},
      {"m10-t33-etc", 10, 33, D::etc, none, 992, 686, none, {992, 685, 68, 2}},
      {"m10-t33-ptc", 10, 33, D::ptc, none, 990, 686, none, {990, 685, 66, 2}},
      {"m10-t93", 10, 93, D::none, 1, 931, 105, 1, {931, 104, 187, 2}},
      {"m10-t93-etc", 10, 93, D::etc, none, 932, 105, none, {932, 104, 188, 2}},
      {"m10-t93-ptc", 10, 93, D::ptc, none, 930, 105, none, {930, 104, 186, 2}},
      {"m11-t89", 11, 89, D::none, 1, 1959, 980, 980, {1959, 979, 179, 2}},
      {"m11-t89-etc", 11, 89, D::etc, none, 1960, 979, none, {1960, 979, 180, 2}},
      {"m11-t89-ptc", 11, 89, D::ptc, none, 1958, 979, none, {1958, 979, 178, 2}},
      {"m12-t63", 12, 63, D::none, 0, 4032, 3282, 3277, {4032, 3281, 126, 2}},
      {"m12-t65", 12, 65, D::none, 1, 4031, 3281, 3251, {4031, 3280, 131, 2}},
      {"m12-t65-etc", 12, 65, D::etc, none, 4032, 3281, none, {4032, 3280, 132, 2}},
      {"m12-t65-ptc", 12, 65, D::ptc, none, 4030, 3281, none, {4030, 3280, 130, 2}},
      {"m12-t195", 12, 195, D::none, 0, 3900, 1759, 1561, {3900, 1758, 390, 2}},
      {"m12-t273", 12, 273, D::none, 1, 3823, 1311, 547, {3823, 1310, 547, 2}},
      {"m12-t273-etc", 12, 273, D::etc, none, 3824, 1311, none, {3824, 1310, 548, 2}},
      {"m12-t273-ptc", 12, 273, D::ptc, none, 3822, 1311, none, {3822, 1310, 546, 2}},
      {"m12-t315", 12, 315, D::none, 0, 3780, 474, 1, {3780, 473, 630, 2}},
      {"m12-t455", 12, 455, D::none, 0, 3640, 197, -1819, {3640, 196, 910, 2}},
      {"m12-t585", 12, 585, D::none, 1, 3511, 196, -3509, {3511, 195, 1171, 2}},
      {"m12-t585-etc", 12, 585, D::etc, none, 3512, 196, none, {3512, 195, 1172, 2}},
      {"m12-t585-ptc", 12, 585, D::ptc, none, 3510, 196, none, {3510, 195, 1170, 2}},
      {"m12-t819", 12, 819, D::none, 0, 3276, 2, -6551, {3276, 1, 1638, 2}},
  };
  return rows;
}

// ----------------------------------------------------------------------------------------------

std::string to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::exact: return "exact";
    case FieldStatus::bounded: return "bounded";
    case FieldStatus::contradicted: return "contradicted";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::partial: return "partial";
    case Verdict::mismatch: return "mismatch";
    case Verdict::infeasible: return "infeasible-at-desk-scale";
  }
  return "?";
}

Verdict combine(const std::vector<FieldCheck>& fields) {
  bool all_exact = true;
  for (const auto& f : fields) {
    if (f.status == FieldStatus::contradicted) return Verdict::mismatch;
    all_exact = all_exact && f.status == FieldStatus::exact;
  }
  return all_exact ? Verdict::match : Verdict::partial;
}

namespace {

FieldCheck count(std::string name, long long claimed, long long measured, std::string method = "rank") {
  return {std::move(name), claimed, measured, measured, std::move(method),
          claimed == measured ? FieldStatus::exact : FieldStatus::contradicted};
}

FieldCheck distance(std::string name, long long claimed, const DistanceCert& d) {
  const auto lo = static_cast<long long>(d.lower), hi = static_cast<long long>(d.upper);
  FieldStatus st = FieldStatus::bounded;
  if (claimed < lo || claimed > hi) {
    st = FieldStatus::contradicted;
  } else if (d.is_exact()) {
    st = FieldStatus::exact;
  }
  return {std::move(name), claimed, lo, hi, to_string(d.method), st};
}

Json fields_json(const std::vector<FieldCheck>& fields) {
  Json out = Json::array();
  for (const auto& f : fields) {
    Json m = f.lower == f.upper ? Json(f.lower) : Json{{"lower", f.lower}, {"upper", f.upper}};
    out.push_back({{"field", f.name}, {"claimed", f.claimed}, {"measured", m}, {"method", f.method},
                   {"status", to_string(f.status)}});
  }
  return out;
}

FieldPtr field_for(int m, const ReproduceOptions& opt) {
  return opt.modulus ? make_field(m, *opt.modulus) : make_field(m);
}

Budget row_budget(const ReproduceOptions& opt) { return Budget::with_seconds(opt.budget_seconds); }

std::string bracket(std::size_t n, std::size_t k, const DistanceCert& d) {
  std::ostringstream os;
  os << "[" << n << "," << k << ",";
  if (d.is_exact()) {
    os << d.lower;
  } else {
    os << d.lower << ".." << d.upper;
  }
  os << "]";
  return os.str();
}

std::string brackets(const AqcReport& r) {
  std::ostringstream os;
  auto part = [&](const DistanceCert& d) {
    if (d.is_exact()) {
      os << d.lower;
    } else {
      os << d.lower << ".." << d.upper;
    }
  };
  os << "[[" << r.n << "," << r.k << ",";
  part(r.dz);
  os << "/";
  part(r.dx);
  os << "]]";
  return os.str();
}

// The two Goppa codes behind a table 1 row group, built once.
struct NestedPair {
  LinearCode g, f;
};

NestedPair nested_pair(const Table1Fixture& fx, const FieldPtr& field) {
  const Poly g = parse_poly(field, fx.g), f = parse_poly(field, fx.f);
  const GoppaSpec sg(g, LocatorMode::nonroots);
  const GoppaSpec sf(f, sg.locators);
  const NestingReport nest = nested_goppa(sf, g);
  if (!nest.applicable) throw InternalError("table 1 fixture with F not divisible by G");
  LinearCode cg = squarefree_boost(sg, goppa_code(sg)).code.relabeled("Gamma(L, " + fx.g + ")");
  LinearCode cf = goppa_code(sf).relabeled("Gamma(L, " + fx.f + ")");
  return {std::move(cg), std::move(cf)};
}

struct Table1Attempt {
  std::vector<FieldCheck> base, right;  // C1 fields; C2 and AQC fields
  AqcReport rep;
  std::size_t c1_n = 0, c1_k = 0, c2_n = 0, c2_k = 0;
  std::optional<std::size_t> pos;
  Verdict verdict() const {
    std::vector<FieldCheck> all = base;
    all.insert(all.end(), right.begin(), right.end());
    return combine(all);
  }
};

Table1Attempt attempt_table1(const Table1Fixture& fx, const NestedPair& p, DerivedOp op, std::optional<std::size_t> pos,
                             const Budget& budget) {
  const LinearCode c1 = apply_op(op, p.g, pos);
  const LinearCode sub = apply_op(op, p.f, pos);
  const LinearCode c2 = dual(sub);
  Table1Attempt a;
  a.rep = css_construct(c1, c2, budget);
  a.c1_n = c1.n();
  a.c1_k = c1.k();
  a.c2_n = c2.n();
  a.c2_k = c2.k();
  if (op == DerivedOp::ptc || op == DerivedOp::stc) a.pos = pos.value_or(p.g.n() - 1);
  a.base = {count("C1.n", static_cast<long long>(fx.base.n), static_cast<long long>(c1.n()), "arithmetic"),
            count("C1.k", static_cast<long long>(fx.base.k), static_cast<long long>(c1.k())),
            distance("C1.d", static_cast<long long>(fx.base.d), a.rep.d1)};
  a.right = {count("C2.n", static_cast<long long>(fx.dual.n), static_cast<long long>(c2.n()), "arithmetic"),
             count("C2.k", static_cast<long long>(fx.dual.k), static_cast<long long>(c2.k())),
             distance("C2.d", static_cast<long long>(fx.dual.d), a.rep.d2),
             count("Q.n", static_cast<long long>(fx.aqc.n), static_cast<long long>(a.rep.n), "arithmetic"),
             count("Q.k", static_cast<long long>(fx.aqc.k), static_cast<long long>(a.rep.k), "arithmetic"),
             distance("Q.dz", static_cast<long long>(fx.aqc.dz), a.rep.dz),
             distance("Q.dx", static_cast<long long>(fx.aqc.dx), a.rep.dx)};
  return a;
}

Json attempt_measured(const Table1Attempt& a) {
  Json m = {{"C1", bracket(a.c1_n, a.c1_k, a.rep.d1)}, {"C2", bracket(a.c2_n, a.c2_k, a.rep.d2)}, {"aqc", brackets(a.rep)},
            {"pure", to_string(a.rep.pure)}, {"report", to_json(a.rep)}};
  if (a.pos) m["position"] = *a.pos;
  return m;
}

bool claims_consistent(const Table1Fixture& fx) {
  return fx.base.n == fx.dual.n && fx.dual.n == fx.aqc.n && fx.base.k + fx.dual.k == fx.aqc.n + fx.aqc.k;
}

}  // namespace

Json to_json(const ReproductionRow& r) {
  Json j = {{"table", r.table}, {"row", r.id}, {"verdict", to_string(r.verdict)}, {"recipe", r.recipe},
            {"fields", fields_json(r.fields)}, {"measured", r.measured}, {"notes", r.notes}};
  if (!r.alternatives.empty()) j["alternatives"] = r.alternatives;
  return j;
}

ReproductionRow reproduce_table1(const Table1Fixture& fx, const ReproduceOptions& opt) {
  ReproductionRow row;
  row.table = 1;
  row.id = std::to_string(fx.row);
  const FieldPtr field = field_for(fx.m, opt);
  row.recipe = {{"field", field_json(*field)}, {"G", fx.g},           {"F", fx.f},
                {"op", to_string(fx.op)},      {"locators", "nonroots"}, {"C1", "op(Gamma(L, G))"},
                {"C2", "dual(op(Gamma(L, F)))"}};
  if (!fx.annotation.empty()) row.notes.push_back(fx.annotation);
  const Budget budget = row_budget(opt);
  try {
    const NestedPair pair = nested_pair(fx, field);
    Table1Attempt best = attempt_table1(fx, pair, fx.op, opt.position, budget);
    const bool positional = fx.op == DerivedOp::ptc || fx.op == DerivedOp::stc;
    if (best.verdict() == Verdict::mismatch && positional && !opt.position && opt.sweep_positions && claims_consistent(fx)) {
      const std::size_t last = pair.g.n() - 1;
      bool found = false;
      std::size_t tried = 0;
      for (std::size_t p = 0; p < last && !budget.expired(); ++p, ++tried) {
        Table1Attempt a = attempt_table1(fx, pair, fx.op, p, budget);
        if (a.verdict() != Verdict::mismatch) {
          row.notes.push_back("the default coordinate " + std::to_string(last) + " contradicts a claim; coordinate " +
                              std::to_string(p) + " reproduces the row");
          best = std::move(a);
          found = true;
          break;
        }
      }
      if (!found) {
        row.notes.push_back("no " + to_string(fx.op) + " coordinate among " + std::to_string(tried + 1) +
                            " tried reproduces the row" + (budget.expired() ? " (time budget reached)" : ""));
      }
    }
    row.fields = best.base;
    row.fields.insert(row.fields.end(), best.right.begin(), best.right.end());
    row.verdict = combine(row.fields);
    row.measured = attempt_measured(best);
    if (best.rep.pure == Purity::assumed) row.notes.push_back("purity assumed: a relative weight was out of budget");
    if (!claims_consistent(fx)) {
      row.notes.push_back("claims are internally inconsistent (lengths or k1 + k2 - n disagree)");
      if (opt.try_pairings) {
        for (DerivedOp op : {DerivedOp::none, DerivedOp::etc, DerivedOp::ptc, DerivedOp::stc, DerivedOp::epc}) {
          if (op == fx.op) continue;
          const Table1Attempt a = attempt_table1(fx, pair, op, std::nullopt, budget);
          const Verdict v = combine(a.right);
          row.alternatives.push_back({{"op", to_string(op)},
                                      {"scope", "C2 and AQC columns"},
                                      {"verdict", to_string(v)},
                                      {"fields", fields_json(a.right)},
                                      {"measured", attempt_measured(a)}});
          if (v != Verdict::mismatch) {
            row.notes.push_back("the C2 and AQC columns are reproduced by the " + to_string(op) + " pairing (" +
                                brackets(a.rep) + ")");
          }
        }
      }
    }
  } catch (const BudgetError& e) {
    row.verdict = Verdict::infeasible;
    row.notes.push_back(std::string("construction out of budget: ") + e.what());
  }
  return row;
}

ReproductionRow reproduce_table2(const Table2Fixture& fx, const ReproduceOptions& opt) {
  ReproductionRow row;
  row.table = 2;
  row.id = fx.id;
  const FieldPtr field = field_for(fx.m, opt);
  const int s = bezzateev_S(*field, fx.t);
  BezzateevVariant variant = s == 1 ? BezzateevVariant::base : BezzateevVariant::punctured;
  if (fx.op == DerivedOp::etc) variant = BezzateevVariant::extended;
  if (fx.op == DerivedOp::ptc) variant = BezzateevVariant::punctured;
  row.recipe = {{"field", field_json(*field)},
                {"G", "z^" + std::to_string(fx.t) + "+1"},
                {"variant", to_string(variant)},
                {"C1", "Goppa code of the variant"},
                {"C2", "even-weight code"}};
  if (s == 0 && fx.op != DerivedOp::none) {
    row.verdict = Verdict::mismatch;
    row.notes.push_back("S = 0: no " + to_string(fx.op) + " variant exists");
    return row;
  }
  try {
    const BezzateevAqc q = bezzateev_aqc({field, fx.t, 1, variant}, row_budget(opt));
    if (fx.s) row.fields.push_back(count("S", *fx.s, s, "field-sum"));
    row.fields.push_back(count("n", static_cast<long long>(fx.n), static_cast<long long>(q.report.n), "arithmetic"));
    row.fields.push_back(count("Dim", static_cast<long long>(fx.dim), static_cast<long long>(q.goppa_dim)));
    if (fx.lb) row.fields.push_back(count("LB", *fx.lb, q.lower_bound, "arithmetic"));
    row.fields.push_back(count("Q.n", static_cast<long long>(fx.aqc.n), static_cast<long long>(q.report.n), "arithmetic"));
    row.fields.push_back(count("Q.k", static_cast<long long>(fx.aqc.k), static_cast<long long>(q.report.k), "arithmetic"));
    row.fields.push_back(distance("Q.dz", static_cast<long long>(fx.aqc.dz), q.report.dz));
    row.fields.push_back(distance("Q.dx", static_cast<long long>(fx.aqc.dx), q.report.dx));
    row.verdict = combine(row.fields);
    row.measured = {{"S", s},
                    {"C1", bracket(q.report.n, q.goppa_dim, q.report.d1)},
                    {"aqc", brackets(q.report)},
                    {"pure", to_string(q.report.pure)},
                    {"boosted", q.boosted},
                    {"report", to_json(q.report)}};
    if (q.punctured_at) row.measured["punctured_at"] = *q.punctured_at;
    if (q.boosted) {
      row.notes.push_back("Gamma(L, G) = Gamma(L, G^2) checked, so the base code has d >= " + std::to_string(2 * fx.t + 1));
    }
    if (fx.op != DerivedOp::none && q.goppa_dim != fx.dim) {
      row.notes.push_back("Dim of a derived row differs from its base row's Dim; extension and puncture keep k");
    }
    if (fx.lb && *fx.lb < 0) row.notes.push_back("negative LB reproduced as arithmetic only");
  } catch (const BudgetError& e) {
    row.verdict = Verdict::infeasible;
    row.notes.push_back(std::string("construction out of budget: ") + e.what());
  }
  return row;
}

// ----------------------------------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_row(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw UsageError("row id '" + s + "' is not a number");
  return v;
}

}  // namespace

std::vector<Table1Fixture> select_table1(const std::string& filter) {
  const auto& all = table1_fixtures();
  if (filter.empty() || filter == "all") return all;
  std::vector<bool> take(all.size() + 1, false);
  for (const std::string& tok : split(filter)) {
    const auto dash = tok.find('-');
    const int lo = parse_row(tok.substr(0, dash));
    const int hi = dash == std::string::npos ? lo : parse_row(tok.substr(dash + 1));
    if (lo < 1 || hi > static_cast<int>(all.size()) || lo > hi) throw UsageError("unknown table 1 row '" + tok + "'");
    for (int r = lo; r <= hi; ++r) take[static_cast<std::size_t>(r)] = true;
  }
  std::vector<Table1Fixture> out;
  for (const auto& fx : all) {
    if (take[static_cast<std::size_t>(fx.row)]) out.push_back(fx);
  }
  return out;
}

std::vector<Table2Fixture> select_table2(const std::string& filter) {
  const auto& all = table2_fixtures();
  if (filter.empty() || filter == "all") return all;
  std::vector<bool> take(all.size(), false);
  for (const std::string& tok : split(filter)) {
    bool any = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const std::string& id = all[i].id;
      // Exact id, or a prefix ending at a '-' boundary ("m8" selects "m8-t3" but not "m80").
      if (id == tok || (id.rfind(tok, 0) == 0 && id[tok.size()] == '-')) {
        take[i] = true;
        any = true;
      }
    }
    if (!any) throw UsageError("unknown table 2 row '" + tok + "'");
  }
  std::vector<Table2Fixture> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (take[i]) out.push_back(all[i]);
  }
  return out;
}

}  // namespace gaqc

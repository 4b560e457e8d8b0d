#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaqc/report.hpp"

namespace gaqc {

enum class DerivedOp { none, etc, ptc, stc, epc };
DerivedOp parse_derived_op(const std::string& s);
std::string to_string(DerivedOp op);
/// Applies the operation; `pos` is used by puncture and shorten (default: last coordinate).
LinearCode apply_op(DerivedOp op, const LinearCode& c, std::optional<std::size_t> pos = std::nullopt);

struct CodeClaim {
  std::size_t n, k, d;
  std::optional<std::size_t> best_known_d;  ///< the "(4)" of an entry printed "3(4)"
};
struct AqcClaim {
  std::size_t n, k, dz, dx;
};

/// One row of the nested-Goppa table: C1 = op(Gamma(L, G)), C2 = dual(op(Gamma(L, F))).
struct Table1Fixture {
  int row;
  int m;
  std::string g, f;  ///< polynomial text of the row group
  DerivedOp op;
  CodeClaim base, dual;
  AqcClaim aqc;
  std::string annotation;
};

/// One row of the d_x = 2 table; op is none for the S-determined main rows.
struct Table2Fixture {
  std::string id;
  int m;
  unsigned t;
  DerivedOp op;
  std::optional<int> s;
  std::size_t n, dim;
  std::optional<long long> lb;
  AqcClaim aqc;
};

const std::vector<Table1Fixture>& table1_fixtures();
const std::vector<Table2Fixture>& table2_fixtures();

enum class FieldStatus { exact, bounded, contradicted };
std::string to_string(FieldStatus s);

/// A claimed number against what was measured for it.
struct FieldCheck {
  std::string name;
  long long claimed;
  long long lower, upper;  ///< measured value or interval
  std::string method;      ///< "rank", "field-sum", "arithmetic" or a distance method
  FieldStatus status;
};

enum class Verdict { match, partial, mismatch, infeasible };
std::string to_string(Verdict v);
/// match: every field exact; mismatch: some field contradicted; partial otherwise.
Verdict combine(const std::vector<FieldCheck>& fields);

struct ReproductionRow {
  int table = 0;
  std::string id;
  Verdict verdict = Verdict::partial;
  std::vector<FieldCheck> fields;
  Json recipe;
  Json measured;
  std::vector<std::string> notes;
  Json alternatives = Json::array();
};
Json to_json(const ReproductionRow& r);

struct ReproduceOptions {
  double budget_seconds = 600;  ///< per row; 0 for unlimited
  std::optional<std::uint32_t> modulus;
  std::optional<std::size_t> position;  ///< puncture/shorten coordinate; default last
  bool sweep_positions = true;          ///< search another coordinate when the default contradicts a claim
  bool try_pairings = true;             ///< for self-inconsistent rows, try every op on the dual side
};

ReproductionRow reproduce_table1(const Table1Fixture& fx, const ReproduceOptions& opt = {});
ReproductionRow reproduce_table2(const Table2Fixture& fx, const ReproduceOptions& opt = {});

/// Row selection: "all", or a comma list of ids and ranges ("1,4,9-13" for table 1, "m6" or
/// "m8-t17" prefixes for table 2). Throws UsageError for an id that matches nothing.
std::vector<Table1Fixture> select_table1(const std::string& filter);
std::vector<Table2Fixture> select_table2(const std::string& filter);

}  // namespace gaqc

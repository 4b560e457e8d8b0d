#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaqc/errors.hpp"
#include "gaqc/reproduce.hpp"

namespace py = pybind11;
using namespace gaqc;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FieldPtr field(int m, std::optional<std::uint32_t> modulus, std::optional<gf_t> alpha) {
  if (!modulus) {
    if (alpha) return make_field(m, make_field(m)->modulus(), alpha);
    return make_field(m);
  }
  return make_field(m, *modulus, alpha);
}

Budget budget(double seconds) { return Budget::with_seconds(seconds); }

BitVector to_bits(const std::string& s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw UsageError("bit strings use only '0' and '1'");
  }
  return v;
}

MatrixF2 to_matrix(const std::vector<std::string>& rows) {
  std::string text;
  for (const auto& r : rows) text += r + "\n";
  return MatrixF2::from_text(text);
}

std::vector<std::string> rows_of(const MatrixF2& m) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r).to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary Goppa, alternant and GRS codes and the asymmetric quantum codes built from them.";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<SearchFailure>(m, "SearchFailure", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  // Held as shared_ptr<Field> only because pybind11 rejects const holders; every method is const.
  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init([](int deg, std::optional<std::uint32_t> modulus, std::optional<gf_t> alpha) {
             return std::const_pointer_cast<Field>(field(deg, modulus, alpha));
           }),
           py::arg("m"), py::arg("modulus") = py::none(), py::arg("alpha") = py::none())
      .def_property_readonly("m", &Field::m)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("alpha", &Field::alpha)
      .def_property_readonly("size", &Field::size)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("exp", &Field::exp)
      .def("log", &Field::log)
      .def("trace", &Field::trace)
      .def("self_dual_basis", [](const Field& f) { return find_self_dual_basis(f); })
      .def("to_dict", [](const Field& f) { return to_py(field_json(f)); })
      .def("__repr__", [](const Field& f) { return "Field(" + f.to_json() + ")"; });
  m.def("primitive_moduli", &primitive_moduli, py::arg("m"));

  py::class_<LinearCode>(m, "LinearCode")
      .def_static(
          "from_generator",
          [](const std::vector<std::string>& rows, std::string label) {
            return LinearCode::from_generator(to_matrix(rows), std::move(label));
          },
          py::arg("rows"), py::arg("label") = "")
      .def_static(
          "from_parity",
          [](const std::vector<std::string>& rows, std::string label) {
            return LinearCode::from_parity(to_matrix(rows), std::move(label));
          },
          py::arg("rows"), py::arg("label") = "")
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly("label", &LinearCode::label)
      .def_property_readonly("bound", [](const LinearCode& c) { return to_py(to_json(c.bound())); })
      .def("generator", [](const LinearCode& c) { return rows_of(c.generator()); })
      .def("parity", [](const LinearCode& c) { return rows_of(c.parity()); })
      .def("contains", [](const LinearCode& c, const std::string& bits) { return c.contains(to_bits(bits)); })
      .def("dual", [](const LinearCode& c) { return dual(c); })
      .def("extend", [](const LinearCode& c) { return extend(c); })
      .def("puncture", [](const LinearCode& c, std::size_t pos) { return puncture(c, pos); })
      .def("shorten", [](const LinearCode& c, std::size_t pos) { return shorten(c, pos); })
      .def("__eq__", &LinearCode::operator==)
      .def("__repr__", [](const LinearCode& c) {
        return "LinearCode([" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "], '" + c.label() + "')";
      });

  m.def(
      "min_distance",
      [](const LinearCode& c, double seconds) { return to_py(to_json(min_distance_exact(c, budget(seconds)))); },
      py::arg("code"), py::arg("budget_seconds") = 0.0,
      "Distance certificate {lower, upper, status, method}.");
  m.def(
      "weight_distribution", [](const LinearCode& c) { return weight_distribution(c); }, py::arg("code"));

  m.def(
      "goppa_code",
      [](int deg, const std::string& poly, const std::string& locators, const std::string& variant,
         std::optional<std::uint32_t> modulus, bool boost) {
        const FieldPtr f = field(deg, modulus, std::nullopt);
        const GoppaSpec spec(parse_poly(f, poly), parse_locator_mode(locators));
        LinearCode c = goppa_code(spec);
        if (boost) {
          BoostResult b = squarefree_boost(spec, c);
          if (b.applied) c = b.code;
        }
        return apply_op(parse_derived_op(variant), c);
      },
      py::arg("m"), py::arg("poly"), py::arg("locators") = "nonroots", py::arg("variant") = "base",
      py::arg("modulus") = py::none(), py::arg("boost") = true);

  m.def(
      "css",
      [](const LinearCode& c1, const LinearCode& c2, double seconds, bool verify) {
        return to_py(to_json(css_construct(c1, c2, budget(seconds), verify)));
      },
      py::arg("c1"), py::arg("c2"), py::arg("budget_seconds") = 0.0, py::arg("verify_purity") = true);

  m.def(
      "bezzateev_aqc",
      [](int deg, unsigned t, const std::string& variant, gf_t a, double seconds) {
        const BezzateevAqc q = bezzateev_aqc({make_field(deg), t, a, parse_bezzateev_variant(variant)}, budget(seconds));
        Json j = to_json(q.report);
        j["S"] = q.s;
        j["goppa_dim"] = q.goppa_dim;
        j["dimension_lower_bound"] = q.lower_bound;
        j["boosted"] = q.boosted;
        return to_py(j);
      },
      py::arg("m"), py::arg("t"), py::arg("variant") = "base", py::arg("a") = 1, py::arg("budget_seconds") = 600.0);

  m.def(
      "expanded_grs_aqc",
      [](int deg, std::size_t k1, std::size_t k2) {
        const ExpandedGrsAqc q = expanded_grs_aqc(make_field(deg), k1, k2);
        return to_py({{"extension", {{"n", q.big_n}, {"k", q.ext_k}, {"dz", q.ext_dz}, {"dx", q.ext_dx}}},
                      {"contained", q.contained},
                      {"dual_is_image", q.dual_is_image},
                      {"binary", to_json(q.binary)}});
      },
      py::arg("m"), py::arg("k1"), py::arg("k2"));

  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def("inverse_entropy", &inverse_entropy, py::arg("y"));
  m.def(
      "gv_curves",
      [](double step, double dx) {
        std::vector<std::tuple<double, double, double, double>> out;
        for (const auto& r : gv_curves(step, dx)) out.emplace_back(r.delta, r.classical, r.quantum_sym, r.aqc_dx_fixed);
        return out;
      },
      py::arg("step") = 0.001, py::arg("dx") = 0.0, "Rows (delta, R_classical, R_quantum_sym, R_aqc_dx_fixed).");

  m.def(
      "reproduce",
      [](int table, const std::string& rows, double seconds) {
        ReproduceOptions opt;
        opt.budget_seconds = seconds;
        py::list out;
        if (table == 1) {
          for (const auto& fx : select_table1(rows)) out.append(to_py(to_json(reproduce_table1(fx, opt))));
        } else if (table == 2) {
          for (const auto& fx : select_table2(rows)) out.append(to_py(to_json(reproduce_table2(fx, opt))));
        } else {
          throw UsageError("table must be 1 or 2");
        }
        return out;
      },
      py::arg("table"), py::arg("rows") = "all", py::arg("budget_seconds") = 600.0);
}

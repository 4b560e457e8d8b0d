#include "gaqc/report.hpp"

#include <cstdio>

namespace gaqc {

std::string hex(std::uint32_t x, int width) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%0*x", width, x);
  return buf;
}

Json hex_list(const std::vector<gf_t>& xs) {
  Json out = Json::array();
  for (gf_t x : xs) out.push_back(hex(x));
  return out;
}

Json to_json(const DistanceCert& d) {
  return {{"lower", d.lower}, {"upper", d.upper}, {"status", to_string(d.status)}, {"method", to_string(d.method)}};
}

Json code_json(const LinearCode& c, const DistanceCert& d) {
  return {{"n", c.n()}, {"k", c.k()}, {"d", to_json(d)}, {"label", c.label()}};
}

Json to_json(const AqcReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"dz", to_json(r.dz)},
          {"dx", to_json(r.dx)},
          {"pure", to_string(r.pure)},
          {"provenance",
           {{"c1", {{"label", r.c1}, {"k", r.k1}, {"d", to_json(r.d1)}}},
            {"c2", {{"label", r.c2}, {"k", r.k2}, {"d", to_json(r.d2)}}},
            {"dz_path", r.dz_path},
            {"dx_path", r.dx_path}}}};
}

Json field_json(const Field& f) {
  return Json::parse(f.to_json());
}

}  // namespace gaqc

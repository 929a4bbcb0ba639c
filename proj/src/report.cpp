#include "zpdisc/report.hpp"

namespace zpdisc {

nlohmann::ordered_json to_json(const DiscrepancyReport& report) {
  nlohmann::ordered_json j;
  j["value"] = to_fraction_string(report.value);
  if (report.witness) {
    j["witness"] = {{"center", report.witness->center},
                    {"depth", report.witness->depth}};
  } else {
    j["witness"] = "depth-limit";
  }
  j["limit_term"] = to_fraction_string(report.limit_term);
  j["finite_max"] = to_fraction_string(report.finite_max);
  j["N"] = report.count;
  j["K"] = report.precision;
  return j;
}

nlohmann::ordered_json to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.p.value();
  j["N"] = report.count;
  j["k_trunc"] = report.k_trunc;
  j["s_trunc"] = report.s_trunc;
  j["tail"] = to_fraction_string(report.tail);
  j["c_p"] = report.c_p;
  j["bound"] = report.bound;
  return j;
}

nlohmann::ordered_json to_json(const WeylTable& table) {
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : table.entries()) {
    entries.push_back({{"character", e.zeta.to_string()},
                       {"re", e.value.real()},
                       {"im", e.value.imag()},
                       {"abs", std::abs(e.value)}});
  }
  return {{"p", table.prime().value()},
          {"k_trunc", table.max_exponent()},
          {"entries", std::move(entries)}};
}

}  // namespace zpdisc

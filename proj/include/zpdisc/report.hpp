#pragma once

// JSON forms of the reports. Exact rationals are "num/den" strings.
//
//   DiscrepancyReport: {value, witness, limit_term, finite_max, N, K}
//     witness is {"center": a, "depth": k} or the string "depth-limit".
//   BoundReport: {p, N, k_trunc, s_trunc, tail, c_p, bound}

#include <json.hpp>

#include "zpdisc/discrepancy.hpp"
#include "zpdisc/leveque.hpp"

namespace zpdisc {

nlohmann::ordered_json to_json(const DiscrepancyReport& report);
nlohmann::ordered_json to_json(const BoundReport& report);
nlohmann::ordered_json to_json(const WeylTable& table);

}  // namespace zpdisc

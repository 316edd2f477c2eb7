#pragma once

#include <json.hpp>
#include <string>

#include "extensor/group_algebra.hpp"
#include "extensor/tensor.hpp"

namespace extensor {

// Text form "1/2*() + 1*(1 2)" and the JSON mirror for group-algebra
// elements; "e2 e1 . (1 2) . e*1" and array-of-terms JSON for operators.

std::string ga_to_text(const GAElem& g);
GAElem ga_from_text(const std::string& s);
nlohmann::ordered_json ga_to_json(const GAElem& g);
GAElem ga_from_json(const nlohmann::json& j);

std::string lop_to_text(const LOp& op);
LOp lop_from_text(const std::string& s, int n);
nlohmann::ordered_json lop_to_json(const LOp& op);
LOp lop_from_json(const nlohmann::json& j, int n);

}  // namespace extensor

#include "extensor/partition.hpp"
#include "extensor/pbw.hpp"

namespace extensor {

nlohmann::ordered_json pbw_to_json(const PBW& u);
PBW pbw_from_json(const nlohmann::json& j);

// {"lambda": "...", "tableaux": [...], "spectrum": [{"tableau": t, "i": i,
//  "content": c}, ...]} in the deterministic tableau order.
nlohmann::ordered_json jm_spectrum_json(const Partition& lambda);

}  // namespace extensor

#pragma once

#include "mstable/chambers.hpp"
#include "mstable/contraction.hpp"
#include "mstable/positivity.hpp"
#include "mstable/reduction.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace mstable::io {

using json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to PARSE_ERROR.
json parse_json(const std::string& text);

json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);

json to_json(const DualGraph& g);
DualGraph graph_from_json(const json& j);

json to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(int n, const json& j);

json to_json(const TestCurve& c);
TestCurve test_curve_from_json(const json& j);

json to_json(const Chamber& c);
Chamber chamber_from_json(const json& j);
/// CSV with header s_lo,s_lo_closed,s_hi,s_hi_closed,alpha_lo,alpha_hi,model.
std::string chambers_csv(const std::vector<Chamber>& table);

json to_json(const DiscrepancyReport& r);
json to_json(const CanonicalDiscrepancy& c);
json to_json(const PositivityReport& r);

}  // namespace mstable::io

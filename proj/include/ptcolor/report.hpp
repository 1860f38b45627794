// JSON serialization of driver results (schema 1).
#pragma once

#include <string>

#include "ptcolor/driver.hpp"
#include "ptcolor/oracles.hpp"

namespace ptcolor {

// {schema, status, t, bound, runtime_ms, colors_used?, coloring?, triangle?,
//  path?, certificate?}
std::string driver_result_to_json(const DriverResult& result, int t, double runtime_ms);

// Re-verifies every object claimed by a serialized result against the graph.
// Returns an empty string on success, otherwise a human-readable reason.
// Throws std::runtime_error on schema errors.
std::string verify_report_against_graph(const Graph& g, const std::string& json_text,
                                        int oracle_cap = kDefaultBruteCap);

}  // namespace ptcolor

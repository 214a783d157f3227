#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "covspec/cayley.hpp"
#include "covspec/membership.hpp"
#include "covspec/metricgraph.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

using Json = nlohmann::ordered_json;

/// {"vertices":[...], "colors":[...]?, "edges":[{"id","from","to","color","length"?}],
///  "lengths":{"A":"2/1"}}. Colors default to order of first appearance. A per-edge
/// "length" overrides the color length. Throws InputError.
MetricGraph metric_graph_from_json(const Json& j);
ColoredGraph colored_graph_from_json(const Json& j);

Json graph_to_json(const ColoredGraph& g);
Json graph_to_json(const MetricGraph& x);

Json word_to_json(const FreeWord& w);
Json certificate_to_json(const Certificate& c);
/// {"covspec":[...], "jumps":[...]} plus witnesses, certificates and termination when explain.
Json covspec_to_json(const MetricGraph& x, const CovSpecResult& r, bool explain);
Json lattice_to_json(const LatticeSpectrum& s);

/// Parses a JSON document, mapping parse errors to InputError.
Json parse_json(const std::string& text);

}  // namespace covspec

#pragma once

#include <string>

#include <json.hpp>

#include "cartanfree/classify.hpp"
#include "cartanfree/coherent.hpp"
#include "cartanfree/hfree.hpp"

namespace cartanfree {

using Json = nlohmann::json;

// MultiPoly <-> [{"exponents": [...], "coeff": "p/q"}, ...] in canonical order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int nvars);

// HFreeModule <-> {"algebra", "n", "d", "actions": [{"root", "matrix"}]}.
Json module_to_json(const HFreeModule& m);
HFreeModule module_from_json(const Json& j);
HFreeModule load_module_file(const std::string& path);

Json basis_to_json(const SpBasis& basis);           // labels, matrices, brackets
Json report_to_json(const VerificationReport& report, const SpBasis& basis);
std::string report_to_text(const VerificationReport& report, const SpBasis& basis);

Json support_graph_to_json(const SupportGraph& g, const ComponentDag& full,
                           const ComponentDag& interior);
// Zero-coefficient non-edges are drawn dashed when the action is supplied.
std::string support_graph_to_dot(const SupportGraph& g,
                                 const CoherentAction* zero_edge_source = nullptr);

Json certificate_to_json(const ScalingCertificate& cert);
Json canonicalization_to_json(const CanonicalizationResult& result);

}  // namespace cartanfree

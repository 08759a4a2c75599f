#pragma once

#include <json.hpp>
#include <string>

#include "vq/catalog.hpp"
#include "vq/correspond.hpp"
#include "vq/lambda.hpp"
#include "vq/linespace.hpp"
#include "vq/moufang.hpp"
#include "vq/quotient.hpp"
#include "vq/veldkamp.hpp"

namespace vq {

using json = nlohmann::json;

json field_to_json(const Field& f);
const Field& field_from_json(const json& j);

json lambda_to_json(const LambdaSpace& lam);
LambdaSpace lambda_from_json(const json& j);

json linespace_to_json(const LineSpace& S);
LineSpace linespace_from_json(const json& j);

json graph_to_json(const VeldkampGraph& g);
VeldkampGraph graph_from_json(const json& j);

json catalog_to_json(const SingularCatalog& cat);

json axioms_to_json(const AxiomReport& r);
json quotient_to_json(const QuotientResult& r);
json certificate_to_json(const MoufangCertificate& c);
json relations_to_json(const RelationReport& r);

/// Canonical serialization used for byte-exact artifact comparison.
std::string canonical_dump(const json& j);

/// DOT rendering: points as circles, lines as boxes; dashed helper edges
/// connect line pairs that are non-opposite at a common point.
std::string graph_to_dot(const VeldkampGraph& g, const std::string& name);

}  // namespace vq

#pragma once

#include <json.hpp>

#include "segre/construct.hpp"
#include "segre/core.hpp"
#include "segre/oracle.hpp"
#include "segre/transform.hpp"

// JSON encodings shared by the CLI, the batch mode, and the tests.
// Field names are lower_snake_case copies of the type fields; rationals
// are encoded as {"num": .., "den": ..}.

namespace segre::io {

using nlohmann::json;

json to_json(const Rat& q);
Rat rat_from_json(const json& j);

json to_json(const core::StratumDescriptor& row);
json to_json(const core::NestedBounds& nb);

json to_json(const transform::SegreProfile& p);
transform::SegreProfile profile_from_json(const json& j);

json to_json(const transform::TransformStep& t);
transform::TransformStep step_from_json(const json& j);

json to_json(const construct::ConstructionCertificate& cert);
json to_json(const construct::GenusRequirement& req);

json to_json(const oracle::FuzzReport& rep);

const char* step_type_name(transform::StepType t);
transform::StepType step_type_from_name(const std::string& name);

}  // namespace segre::io

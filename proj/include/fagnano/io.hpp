#pragma once

#include <json.hpp>

#include "fagnano/geom.hpp"
#include "fagnano/schedule.hpp"

namespace fagnano {

/// [[x, y], [x, y], [x, y]]
nlohmann::json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);

/// {"triangle": [[x, y] x 3], "generator": [{"edge": "A|B|C", "u": real}, ...]}
nlohmann::json schedule_to_json(const Schedule& s);
/// Throws SchemaError on any shape or type mismatch. Domain checks
/// (u range, feasibility) are left to the operations.
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(Point p);

}  // namespace fagnano

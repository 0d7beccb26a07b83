#include "fagnano/io.hpp"

#include <string>

namespace fagnano {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

double number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  return j.get<double>();
}

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) schema("a point must be [x, y]");
  return {number(j[0], "x"), number(j[1], "y")};
}

}  // namespace

nlohmann::json point_to_json(Point p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json triangle_to_json(const Triangle& t) {
  return nlohmann::json::array({point_to_json(t.a), point_to_json(t.b), point_to_json(t.c)});
}

Triangle triangle_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) schema("triangle must be an array of three points");
  return {point_from_json(j[0]), point_from_json(j[1]), point_from_json(j[2])};
}

nlohmann::json schedule_to_json(const Schedule& s) {
  nlohmann::json gen = nlohmann::json::array();
  for (const SchedulePoint& p : s.generator) {
    gen.push_back({{"edge", std::string(1, edge_letter(p.edge))}, {"u", p.u}});
  }
  return {{"triangle", triangle_to_json(s.triangle)}, {"generator", gen}};
}

Schedule schedule_from_json(const nlohmann::json& j) {
  if (!j.is_object()) schema("schedule must be a JSON object");
  if (!j.contains("triangle")) schema("schedule is missing \"triangle\"");
  if (!j.contains("generator") || !j["generator"].is_array()) {
    schema("schedule is missing the \"generator\" array");
  }
  Schedule s;
  s.triangle = triangle_from_json(j["triangle"]);
  for (const auto& item : j["generator"]) {
    if (!item.is_object() || !item.contains("edge") || !item.contains("u")) {
      schema("generator entries must be {\"edge\": ..., \"u\": ...}");
    }
    const auto& edge = item["edge"];
    if (!edge.is_string() || edge.get<std::string>().size() != 1) schema("edge must be \"A\", \"B\" or \"C\"");
    const char letter = edge.get<std::string>()[0];
    if (letter != 'A' && letter != 'B' && letter != 'C') schema("edge must be \"A\", \"B\" or \"C\"");
    s.generator.push_back({edge_from_letter(letter), number(item["u"], "u")});
  }
  return s;
}

}  // namespace fagnano

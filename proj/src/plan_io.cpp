#include "plan_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace udrange {

namespace {

using nlohmann::json;

std::uint64_t positive_field(const json& seg, const char* key, std::size_t pos) {
  const std::string where = "segments[" + std::to_string(pos) + "]";
  auto it = seg.find(key);
  if (it == seg.end()) throw PlanError(where + ": missing \"" + key + "\"");
  if (!it->is_number_unsigned())
    throw PlanError(where + ": \"" + key + "\" must be a non-negative integer");
  return it->get<std::uint64_t>();
}

}  // namespace

FrequencyPlan parse_plan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PlanError(std::string("plan is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw PlanError("plan must be a JSON object");

  RawPlan raw;
  auto fmin = doc.find("f_min_hz");
  if (fmin == doc.end() || !fmin->is_number()) throw PlanError("\"f_min_hz\" must be a number");
  raw.f_min_hz = fmin->get<double>();

  auto segs = doc.find("segments");
  if (segs == doc.end() || !segs->is_array()) throw PlanError("\"segments\" must be an array");
  for (std::size_t i = 0; i < segs->size(); ++i) {
    const json& seg = (*segs)[i];
    if (!seg.is_object()) throw PlanError("segments[" + std::to_string(i) + "]: must be an object");
    raw.segments.push_back({positive_field(seg, "start_index", i), positive_field(seg, "count", i)});
  }
  return FrequencyPlan::validate(std::move(raw));
}

FrequencyPlan load_plan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PlanError("cannot open plan file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_plan(buf.str());
  } catch (const PlanError& e) {
    throw PlanError(path + ": " + e.what());
  }
}

std::string plan_to_json(const FrequencyPlan& plan) {
  nlohmann::ordered_json doc;
  doc["f_min_hz"] = plan.f_min_hz();
  doc["segments"] = nlohmann::ordered_json::array();
  for (const Segment& s : plan.segments()) doc["segments"].push_back({{"start_index", s.start}, {"count", s.count}});
  return doc.dump(2) + "\n";
}

}  // namespace udrange

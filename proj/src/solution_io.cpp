#include <charconv>
#include <string>

#include "json.hpp"
#include "mwcarp/error.hpp"
#include "mwcarp/io.hpp"

namespace mwcarp {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParseError, "solution: " + what); }

std::int32_t label_index(std::string_view digits, std::string_view label) {
  std::int32_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1) bad("bad label '" + std::string(label) + "'");
  return value - 1;
}

ArcId parse_traversal(std::string_view label) {
  if (label.size() >= 2 && label[0] == 'a') return ArcId::directed(label_index(label.substr(1), label));
  if (label.size() >= 3 && label[0] == 'e') {
    const std::int32_t e = label_index(label.substr(1, label.size() - 2), label);
    if (label.back() == '>') return ArcId::forward(e);
    if (label.back() == '<') return ArcId::backward(e);
  }
  bad("bad traversal label '" + std::string(label) + "'");
}

MemberRef parse_member(std::string_view label) {
  if (label.size() >= 2 && label[0] == 'a') return MemberRef::arc(label_index(label.substr(1), label));
  if (label.size() >= 2 && label[0] == 'e') return MemberRef::edge(label_index(label.substr(1), label));
  bad("bad member label '" + std::string(label) + "'");
}

}  // namespace

std::string write_solution(const Instance& inst, const Solution& sol, const SolutionMeta& meta) {
  Json doc;
  doc["instance"] = inst.name;
  doc["heuristic"] = meta.heuristic;
  doc["seed"] = meta.seed;
  doc["runs"] = meta.runs;
  doc["total_cost"] = sol.total_cost;
  if (inst.service_surcharge != 0) doc["service_surcharge"] = inst.service_surcharge;
  Json routes = Json::array();
  for (const Route& r : sol.routes) {
    Json route;
    route["cost"] = r.cost;
    Json vertices = Json::array();
    Json arcs = Json::array();
    if (!r.walk.empty()) vertices.push_back(r.walk.start() + 1);
    for (const Traversal& t : r.walk.steps) {
      vertices.push_back(t.head + 1);
      arcs.push_back(to_label(t.via));
    }
    Json served = Json::array();
    for (MemberRef m : r.served) served.push_back(to_label(m));
    route["vertices"] = std::move(vertices);
    route["arcs"] = std::move(arcs);
    route["served"] = std::move(served);
    routes.push_back(std::move(route));
  }
  doc["routes"] = std::move(routes);
  return doc.dump(2) + "\n";
}

Solution parse_solution(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
    Solution sol;
    sol.total_cost = doc.at("total_cost").get<Cost>();
    for (const Json& route : doc.at("routes")) {
      Route r;
      r.cost = route.at("cost").get<Cost>();
      const auto vertices = route.at("vertices").get<std::vector<std::int64_t>>();
      const auto arcs = route.at("arcs").get<std::vector<std::string>>();
      if (arcs.empty() ? !vertices.empty() && vertices.size() != 1 : vertices.size() != arcs.size() + 1) {
        bad("vertex and arc lists of a route do not match");
      }
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        r.walk.steps.push_back({static_cast<VertexId>(vertices[i] - 1), static_cast<VertexId>(vertices[i + 1] - 1),
                                parse_traversal(arcs[i])});
      }
      for (const auto& label : route.at("served").get<std::vector<std::string>>()) r.served.push_back(parse_member(label));
      sol.routes.push_back(std::move(r));
    }
    return sol;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace mwcarp

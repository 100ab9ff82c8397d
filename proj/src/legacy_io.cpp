// Best-effort reader for third-party CARP files. Recognised layouts:
//   gdb/egl:  "NOMBRE : ...", "LISTA_ARISTAS_REQ :" rows "( 1, 2) coste 9 demanda 14"
//   lpr/mval: "NAME : ...", sections "ReE.", "EDGE", "ReA.", "ARC" with rows
//             "<label> <from> <to> <t.cost> [<demand> <s.cost>]"

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>
#include <vector>

#include "mwcarp/error.hpp"
#include "mwcarp/io.hpp"

namespace mwcarp {
namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::int64_t> integers(const std::string& s) {
  static const std::regex re("-?[0-9]+");
  std::vector<std::int64_t> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoll(it->str()));
  }
  return out;
}

enum class Section { kNone, kRequiredEdges, kEdges, kRequiredArcs, kArcs };

struct Row {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t cost = 0;
  std::int64_t demand = 0;
  std::int64_t serve_cost = -1;
  int line = 0;
};

}  // namespace

Instance parse_legacy_instance(std::string_view text) {
  Instance inst;
  std::int64_t n = -1;
  std::int64_t depot = 1;
  std::vector<Row> edge_rows;
  std::vector<Row> arc_rows;
  Section section = Section::kNone;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string raw = trim(std::string(text.substr(pos, end - pos)));
    pos = end + 1;
    ++number;
    if (raw.empty()) continue;
    const std::string up = upper(raw);

    // "KEY : value" header lines.
    const auto colon = raw.find(':');
    const std::string value = colon == std::string::npos ? std::string() : trim(raw.substr(colon + 1));
    if (!value.empty()) {
      const std::string key = upper(trim(raw.substr(0, colon)));
      const auto nums = integers(value);
      if (key == "NAME" || key == "NOMBRE") {
        inst.name = value;
      } else if (key.find("CAPAC") != std::string::npos && !nums.empty()) {
        inst.capacity = nums.front();
      } else if (key.find("DEPO") != std::string::npos && !nums.empty()) {
        depot = nums.front();
      } else if ((key == "VERTICES" || key == "#NODES" || key == "NODES" || key == "NB_NODES") && !nums.empty()) {
        n = nums.front();
      }
      continue;
    }

    // Section headers.
    if (up.rfind("LISTA_ARISTAS_REQ", 0) == 0 || up.rfind("REE", 0) == 0) {
      section = Section::kRequiredEdges;
      continue;
    }
    if (up.rfind("LISTA_ARISTAS_NOREQ", 0) == 0 || up.rfind("EDGE", 0) == 0) {
      section = Section::kEdges;
      continue;
    }
    if (up.rfind("LISTA_ARCOS_REQ", 0) == 0 || up.rfind("REA", 0) == 0) {
      section = Section::kRequiredArcs;
      continue;
    }
    if (up.rfind("LISTA_ARCOS_NOREQ", 0) == 0 || up.rfind("ARC", 0) == 0) {
      section = Section::kArcs;
      continue;
    }
    if (section == Section::kNone) continue;

    // Member rows. Drop a leading alphanumeric label such as "E12" or "NrA3".
    std::string body = raw;
    if (std::isalpha(static_cast<unsigned char>(body[0]))) {
      const auto sp = body.find_first_of(" \t");
      body = sp == std::string::npos ? std::string() : body.substr(sp);
    }
    const auto nums = integers(body);
    if (nums.size() < 3) {
      section = Section::kNone;
      continue;
    }
    Row row{nums[0], nums[1], nums[2], 0, -1, number};
    const bool required = section == Section::kRequiredEdges || section == Section::kRequiredArcs;
    if (required) {
      if (nums.size() < 4) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(number) + ": required member without demand");
      }
      row.demand = nums[3];
      if (nums.size() >= 5) row.serve_cost = nums[4];
    }
    (section == Section::kRequiredEdges || section == Section::kEdges ? edge_rows : arc_rows).push_back(row);
  }

  if (n < 0) {
    n = 0;
    for (const Row& r : edge_rows) n = std::max({n, r.u, r.v});
    for (const Row& r : arc_rows) n = std::max({n, r.u, r.v});
  }
  if (inst.capacity <= 0) throw Error(ErrorCode::kParseError, "no capacity found");
  if (depot < 1 || depot > n) throw Error(ErrorCode::kSemanticError, "depot out of range");
  if (inst.name.empty()) inst.name = "unnamed";
  for (char& c : inst.name) {
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  }

  auto vertex = [&](std::int64_t v, int line) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::kSemanticError, "line " + std::to_string(line) + ": vertex out of range");
    }
    return static_cast<VertexId>(v - 1);
  };
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (const Row& r : edge_rows) {
    edges.push_back({vertex(r.u, r.line), vertex(r.v, r.line), r.cost, r.cost});
    inst.edge_demand.push_back(r.demand);
    if (r.serve_cost >= 0) inst.service_surcharge += r.serve_cost - r.cost;
  }
  for (const Row& r : arc_rows) {
    arcs.push_back({vertex(r.u, r.line), vertex(r.v, r.line), r.cost});
    inst.arc_demand.push_back(r.demand);
    if (r.serve_cost >= 0) inst.service_surcharge += r.serve_cost - r.cost;
  }
  inst.depot = static_cast<VertexId>(depot - 1);
  try {
    inst.graph = MixedMultigraph(static_cast<int>(n), std::move(edges), std::move(arcs));
  } catch (const Error& e) {
    throw Error(ErrorCode::kSemanticError, e.what());
  }
  for (MemberRef m : demand_arcs(inst)) {
    if (inst.demand(m) > inst.capacity) inst.warnings.push_back("demand of " + to_label(m) + " exceeds capacity");
  }
  return inst;
}

}  // namespace mwcarp

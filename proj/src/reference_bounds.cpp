#include <algorithm>
#include <array>

#include "mwcarp/bench.hpp"

namespace mwcarp {
namespace {

// Published lower and upper bounds. The "ob" rows also list the number of
// demand components of the published instances.
constexpr std::array kBounds = {
    ReferenceBound{"lpr-a-01", 13484, 13484, "lpr", -1},
    ReferenceBound{"lpr-a-02", 28052, 28052, "lpr", -1},
    ReferenceBound{"lpr-a-03", 76115, 76155, "lpr", -1},
    ReferenceBound{"lpr-a-04", 126946, 127352, "lpr", -1},
    ReferenceBound{"lpr-a-05", 202736, 205499, "lpr", -1},
    ReferenceBound{"lpr-b-01", 14835, 14835, "lpr", -1},
    ReferenceBound{"lpr-b-02", 28654, 28654, "lpr", -1},
    ReferenceBound{"lpr-b-03", 77859, 77878, "lpr", -1},
    ReferenceBound{"lpr-b-04", 126932, 127454, "lpr", -1},
    ReferenceBound{"lpr-b-05", 209791, 211771, "lpr", -1},
    ReferenceBound{"lpr-c-01", 18639, 18639, "lpr", -1},
    ReferenceBound{"lpr-c-02", 36339, 36339, "lpr", -1},
    ReferenceBound{"lpr-c-03", 111117, 111632, "lpr", -1},
    ReferenceBound{"lpr-c-04", 168441, 169254, "lpr", -1},
    ReferenceBound{"lpr-c-05", 257890, 259937, "lpr", -1},
    ReferenceBound{"mval1A", 230, 230, "mval", -1},
    ReferenceBound{"mval1B", 261, 261, "mval", -1},
    ReferenceBound{"mval1C", 309, 315, "mval", -1},
    ReferenceBound{"mval2A", 324, 324, "mval", -1},
    ReferenceBound{"mval2B", 395, 395, "mval", -1},
    ReferenceBound{"mval2C", 521, 526, "mval", -1},
    ReferenceBound{"mval3A", 115, 115, "mval", -1},
    ReferenceBound{"mval3B", 142, 142, "mval", -1},
    ReferenceBound{"mval3C", 166, 166, "mval", -1},
    ReferenceBound{"mval4A", 580, 580, "mval", -1},
    ReferenceBound{"mval4B", 650, 650, "mval", -1},
    ReferenceBound{"mval4C", 630, 630, "mval", -1},
    ReferenceBound{"mval4D", 746, 770, "mval", -1},
    ReferenceBound{"mval5A", 597, 597, "mval", -1},
    ReferenceBound{"mval5B", 613, 613, "mval", -1},
    ReferenceBound{"mval5C", 697, 697, "mval", -1},
    ReferenceBound{"mval5D", 719, 739, "mval", -1},
    ReferenceBound{"mval6A", 326, 326, "mval", -1},
    ReferenceBound{"mval6B", 317, 317, "mval", -1},
    ReferenceBound{"mval6C", 365, 371, "mval", -1},
    ReferenceBound{"mval7A", 364, 364, "mval", -1},
    ReferenceBound{"mval7B", 412, 412, "mval", -1},
    ReferenceBound{"mval7C", 424, 426, "mval", -1},
    ReferenceBound{"mval8A", 581, 581, "mval", -1},
    ReferenceBound{"mval8B", 531, 531, "mval", -1},
    ReferenceBound{"mval8C", 617, 638, "mval", -1},
    ReferenceBound{"mval9A", 458, 458, "mval", -1},
    ReferenceBound{"mval9B", 453, 453, "mval", -1},
    ReferenceBound{"mval9C", 428, 429, "mval", -1},
    ReferenceBound{"mval9D", 514, 520, "mval", -1},
    ReferenceBound{"mval10A", 634, 634, "mval", -1},
    ReferenceBound{"mval10B", 661, 661, "mval", -1},
    ReferenceBound{"mval10C", 623, 623, "mval", -1},
    ReferenceBound{"mval10D", 643, 649, "mval", -1},
    ReferenceBound{"egl-g1-A", 976907, 1049708, "egl", -1},
    ReferenceBound{"egl-g1-B", 1093884, 1140692, "egl", -1},
    ReferenceBound{"egl-g1-C", 1212151, 1282270, "egl", -1},
    ReferenceBound{"egl-g1-D", 1341918, 1420126, "egl", -1},
    ReferenceBound{"egl-g1-E", 1482176, 1583133, "egl", -1},
    ReferenceBound{"egl-g2-A", 1069536, 1129229, "egl", -1},
    ReferenceBound{"egl-g2-B", 1185221, 1255907, "egl", -1},
    ReferenceBound{"egl-g2-C", 1311339, 1418145, "egl", -1},
    ReferenceBound{"egl-g2-D", 1446680, 1516103, "egl", -1},
    ReferenceBound{"egl-g2-E", 1581459, 1701681, "egl", -1},
    ReferenceBound{"ob-egl-g1-A", 817223, 1152093, "ob", 2},
    ReferenceBound{"ob2-egl-g1-A", 736899, 1073386, "ob", 4},
    ReferenceBound{"ob-egl-g1-B", 1180105, 1627305, "ob", 2},
    ReferenceBound{"ob2-egl-g1-B", 840773, 1221424, "ob", 5},
    ReferenceBound{"ob-egl-g1-C", 1018890, 1405024, "ob", 2},
    ReferenceBound{"ob2-egl-g1-C", 992974, 1405836, "ob", 5},
    ReferenceBound{"ob-egl-g1-D", 1354671, 1810306, "ob", 3},
    ReferenceBound{"ob2-egl-g1-D", 1056593, 1491387, "ob", 4},
    ReferenceBound{"ob-egl-g1-E", 1486033, 1955945, "ob", 3},
    ReferenceBound{"ob2-egl-g1-E", 1175241, 1609377, "ob", 4},
    ReferenceBound{"ob-egl-g2-A", 922853, 1286986, "ob", 2},
    ReferenceBound{"ob2-egl-g2-A", 854823, 1202379, "ob", 4},
    ReferenceBound{"ob-egl-g2-B", 1015013, 1388809, "ob", 2},
    ReferenceBound{"ob2-egl-g2-B", 906415, 1259017, "ob", 4},
    ReferenceBound{"ob-egl-g2-C", 1308463, 1701004, "ob", 2},
    ReferenceBound{"ob2-egl-g2-C", 1154372, 1574762, "ob", 4},
    ReferenceBound{"ob-egl-g2-D", 1315717, 1720548, "ob", 2},
    ReferenceBound{"ob2-egl-g2-D", 1361397, 1782335, "ob", 4},
    ReferenceBound{"ob-egl-g2-E", 1677109, 2139982, "ob", 2},
    ReferenceBound{"ob2-egl-g2-E", 1295704, 1747883, "ob", 4},
    ReferenceBound{"ob-lpr-a-03", 71179, 73055, "ob", 3},
    ReferenceBound{"ob2-lpr-a-03", 67219, 69307, "ob", 5},
    ReferenceBound{"ob-lpr-a-04", 119759, 123838, "ob", 2},
    ReferenceBound{"ob2-lpr-a-04", 115110, 119550, "ob", 4},
    ReferenceBound{"ob-lpr-a-05", 195518, 203832, "ob", 2},
    ReferenceBound{"ob2-lpr-a-05", 189968, 197748, "ob", 5},
    ReferenceBound{"ob-lpr-b-03", 73670, 75052, "ob", 2},
    ReferenceBound{"ob2-lpr-b-03", 67924, 69518, "ob", 5},
    ReferenceBound{"ob-lpr-b-04", 122079, 127020, "ob", 2},
    ReferenceBound{"ob2-lpr-b-04", 112104, 116696, "ob", 4},
    ReferenceBound{"ob-lpr-b-05", 204389, 213593, "ob", 2},
    ReferenceBound{"ob2-lpr-b-05", 191138, 197878, "ob", 5},
    ReferenceBound{"ob-lpr-c-03", 105897, 109913, "ob", 2},
    ReferenceBound{"ob2-lpr-c-03", 98244, 102270, "ob", 4},
    ReferenceBound{"ob-lpr-c-04", 161856, 167336, "ob", 2},
    ReferenceBound{"ob2-lpr-c-04", 155894, 161615, "ob", 4},
    ReferenceBound{"ob-lpr-c-05", 250636, 258396, "ob", 2},
    ReferenceBound{"ob2-lpr-c-05", 238299, 246368, "ob", 4},
};

}  // namespace

std::span<const ReferenceBound> reference_bounds() { return kBounds; }

std::optional<ReferenceBound> lookup_bound(std::string_view instance) {
  const auto it = std::find_if(kBounds.begin(), kBounds.end(),
                               [&](const ReferenceBound& b) { return b.instance == instance; });
  if (it == kBounds.end()) return std::nullopt;
  return *it;
}

InstanceStats stats(const Instance& inst) {
  InstanceStats s;
  s.vertices = inst.graph.vertex_count();
  s.edges = static_cast<int>(inst.graph.edges().size());
  s.arcs = static_cast<int>(inst.graph.arcs().size());
  s.capacity = inst.capacity;
  std::vector<ArcId> demand;
  for (MemberRef m : demand_arcs(inst)) {
    demand.push_back(m.kind == MemberKind::kEdge ? ArcId::forward(m.index) : ArcId::directed(m.index));
    s.total_demand += inst.demand(m);
  }
  s.demand_members = static_cast<int>(demand.size());
  s.components = static_cast<int>(weak_components(induced_required_graph(inst.graph, demand)).size());
  return s;
}

}  // namespace mwcarp

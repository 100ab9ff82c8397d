#include <gtest/gtest.h>

#include <map>

#include "mwcarp/error.hpp"
#include "mwcarp/rpp.hpp"
#include "support/generators.hpp"

using namespace mwcarp;
using testgen::Rng;

namespace {

RequiredSet required_of(std::vector<ArcId> arcs) {
  RequiredSet r;
  for (std::size_t i = 0; i < arcs.size(); ++i) r.add(arcs[i], static_cast<std::int32_t>(i));
  return r;
}

// Cheapest closed walk traversing every required traversal: try every
// cyclic order, join consecutive ones by shortest paths.
Cost brute_force_drpp(const MixedMultigraph& g, const std::vector<ArcId>& r) {
  if (r.empty()) return 0;
  const auto dist = testgen::bellman_ford_all(g);
  std::vector<int> rest(r.size() - 1);
  std::iota(rest.begin(), rest.end(), 1);
  Cost best = kInfinity;
  do {
    std::vector<int> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    Cost c = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const ArcId a = r[order[i]];
      const ArcId b = r[order[(i + 1) % order.size()]];
      c = std::min(kInfinity, c + g.cost(a) + dist[g.head(a)][g.tail(b)]);
    }
    best = std::min(best, c);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

// Required traversals served by a tour, keyed by origin.
std::map<std::int32_t, ArcId> served_by(const ServiceTour& t) {
  std::map<std::int32_t, ArcId> out;
  for (std::size_t i = 0; i < t.service.size(); ++i) {
    if (t.service[i] >= 0) {
      EXPECT_FALSE(out.contains(t.service[i])) << "origin served twice";
      out[t.service[i]] = t.walk.steps[i].via;
    }
  }
  return out;
}

Cost balancing_cost_by_matching(const MixedMultigraph& g, const std::vector<ArcId>& r) {
  const auto bal = balances(induced_required_graph(g, r));
  const auto dist = testgen::bellman_ford_all(g);
  std::vector<int> surplus, deficit;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < bal[v]; ++i) surplus.push_back(v);
    for (int i = 0; i < -bal[v]; ++i) deficit.push_back(v);
  }
  std::sort(deficit.begin(), deficit.end());
  Cost best = surplus.empty() ? 0 : kInfinity;
  if (surplus.empty()) return 0;
  do {
    Cost c = 0;
    for (std::size_t i = 0; i < surplus.size(); ++i) c = std::min(kInfinity, c + dist[surplus[i]][deficit[i]]);
    best = std::min(best, c);
  } while (std::next_permutation(deficit.begin(), deficit.end()));
  return best;
}

std::vector<ArcId> random_required(Rng& rng, const MixedMultigraph& g, int count) {
  const auto trav = testgen::all_traversals(g);
  std::vector<ArcId> r;
  for (int i = 0; i < count; ++i) r.push_back(trav[uniform_index(rng, trav.size())]);
  return r;
}

}  // namespace

TEST(EulerianRpp, SingleEulerianComponentIsItsEulerTour) {
  const MixedMultigraph g(3, {}, {{0, 1, 2}, {1, 2, 3}, {2, 0, 4}, {0, 2, 50}});
  const auto r = required_of({ArcId::directed(0), ArcId::directed(1), ArcId::directed(2)});
  const VertexId reps[] = {1};
  const auto t = solve_eulerian_rpp(g, all_pairs_shortest_paths(g), r, reps);
  EXPECT_TRUE(t.walk.is_closed());
  EXPECT_EQ(t.walk.cost(g), 9);
  EXPECT_EQ(t.walk.start(), 1);
  EXPECT_EQ(served_by(t).size(), 3u);
}

TEST(EulerianRpp, JoinsComponentsThroughRepresentatives) {
  // Two 2-cycles far apart, connected by a costly corridor.
  const MixedMultigraph g(4, {{1, 2, 10, 10}}, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}});
  const auto r = required_of({ArcId::directed(0), ArcId::directed(1), ArcId::directed(2), ArcId::directed(3)});
  const VertexId reps[] = {1, 2};
  const auto t = solve_eulerian_rpp(g, all_pairs_shortest_paths(g), r, reps);
  EXPECT_TRUE(t.walk.is_closed());
  EXPECT_EQ(t.walk.cost(g), 4 + 20);
  EXPECT_EQ(served_by(t).size(), 4u);
}

TEST(EulerianRpp, Errors) {
  const MixedMultigraph g(4, {}, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}, {0, 2, 1}});
  const auto dm = all_pairs_shortest_paths(g);
  const auto two = required_of({ArcId::directed(0), ArcId::directed(1), ArcId::directed(2), ArcId::directed(3)});
  const VertexId one_rep[] = {0};
  try {
    solve_eulerian_rpp(g, dm, two, one_rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRepsDontCover);
  }
  const auto unbalanced = required_of({ArcId::directed(4)});
  try {
    solve_eulerian_rpp(g, dm, unbalanced, one_rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEulerian);
  }
}

TEST(BalanceRequired, AddsCheapestBalancingPaths) {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 2, 7);
    shape.extra_members = testgen::uniform(rng, 0, 8);
    const MixedMultigraph g = testgen::strong_graph(rng, shape);
    const auto r = random_required(rng, g, testgen::uniform(rng, 1, 4));
    const auto dm = all_pairs_shortest_paths(g);
    const RequiredSet balanced = balance_required(g, dm, required_of(r));
    const auto view = induced_required_graph(g, balanced.arcs);
    for (int b : balances(view)) EXPECT_EQ(b, 0);
    Cost added = 0;
    for (std::size_t i = 0; i < balanced.size(); ++i) {
      if (i < r.size()) {
        EXPECT_EQ(balanced.arcs[i], r[i]);
        EXPECT_EQ(balanced.origin[i], static_cast<std::int32_t>(i));
      } else {
        EXPECT_EQ(balanced.origin[i], -1);
        added += g.cost(balanced.arcs[i]);
      }
    }
    EXPECT_EQ(added, balancing_cost_by_matching(g, r));
  }
}

TEST(Drpp, LowerAndUpperBoundsAgainstBruteForce) {
  Rng rng(41);
  int single_component_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 1, 6);
    shape.extra_members = testgen::uniform(rng, 0, 6);
    const MixedMultigraph g = testgen::strong_graph(rng, shape);
    const auto r = random_required(rng, g, testgen::uniform(rng, 1, 5));
    const auto dm = all_pairs_shortest_paths(g);
    const auto t = solve_drpp(g, dm, required_of(r));
    ASSERT_TRUE(t.walk.is_closed());
    EXPECT_EQ(served_by(t).size(), r.size());
    for (const auto& [origin, via] : served_by(t)) EXPECT_EQ(via, r[origin]);
    const Cost opt = brute_force_drpp(g, r);
    const Cost cost = t.walk.cost(g);
    EXPECT_GE(cost, opt);
    if (weak_components(induced_required_graph(g, r)).size() == 1) {
      ++single_component_cases;
      EXPECT_LE(cost, 2 * opt);
    }
  }
  EXPECT_GT(single_component_cases, 50);
}

TEST(Drpp, AnchorRotatesTourStart) {
  const MixedMultigraph g(3, {}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  RppOptions opts;
  opts.anchor = 2;
  const auto t = solve_drpp(g, all_pairs_shortest_paths(g), required_of({ArcId::directed(0)}), opts);
  EXPECT_EQ(t.walk.start(), 2);
  EXPECT_EQ(t.walk.cost(g), 3);
}

TEST(Drpp, ExhaustiveJoinNeverWorseThanLowestVertexReps) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 4, 9);
    shape.extra_members = testgen::uniform(rng, 2, 12);
    shape.arc_percent = 80;
    const MixedMultigraph g = testgen::strong_graph(rng, shape);
    const auto dm = all_pairs_shortest_paths(g);
    const auto balanced = balance_required(g, dm, required_of(random_required(rng, g, testgen::uniform(rng, 2, 4))));
    const auto comps = weak_components(induced_required_graph(g, balanced.arcs));
    if (comps.size() < 2 || comps.size() > 3) continue;
    std::vector<VertexId> lowest;
    for (const auto& c : comps) lowest.push_back(c.front());
    const Cost fixed = solve_eulerian_rpp(g, dm, balanced, lowest).walk.cost(g);
    const Cost chosen = solve_drpp(g, dm, balanced).walk.cost(g);
    EXPECT_LE(chosen, fixed);
  }
}

TEST(Mwrpp, ServesEveryMemberOnce) {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 2, 10);
    shape.extra_members = testgen::uniform(rng, 0, 12);
    const MixedMultigraph g = testgen::strong_graph(rng, shape);
    std::vector<MemberRef> members;
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
      if (testgen::chance(rng, 50)) members.push_back(MemberRef::edge(e));
    }
    for (int a = 0; a < static_cast<int>(g.arcs().size()); ++a) {
      if (testgen::chance(rng, 50)) members.push_back(MemberRef::arc(a));
    }
    if (members.empty()) continue;
    const auto h = kAllHeuristics[static_cast<std::size_t>(trial) % kAllHeuristics.size()];
    const auto t = solve_mwrpp(g, all_pairs_shortest_paths(g), members, {h, static_cast<std::uint64_t>(trial)});
    ASSERT_TRUE(t.walk.is_closed());
    const auto served = served_by(t);
    ASSERT_EQ(served.size(), members.size());
    for (const auto& [origin, via] : served) EXPECT_EQ(member_of(via), members[origin]);
  }
}

TEST(Heuristics, NamesRoundTrip) {
  for (ServiceHeuristic h : kAllHeuristics) EXPECT_EQ(parse_heuristic(to_string(h)), h);
  EXPECT_FALSE(parse_heuristic("all").has_value());
}

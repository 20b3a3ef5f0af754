#include <algorithm>
#include <map>
#include <set>

#include "clrp/catalog.hpp"
#include "clrp/nc_transform.hpp"
#include "doctest.h"

using namespace clrp;

namespace {

int count_edges(const MultigraphInstance& g, const std::string& tail,
                const std::string& head) {
  int n = 0;
  for (const auto& e : g.edges)
    if (e.tail == tail && e.head == head) ++n;
  return n;
}

}  // namespace

TEST_CASE("unit-rate expansion of the fano network") {
  const NetworkInstance net = catalog::network("fano");
  const MultigraphInstance g = transform(net, std::vector<int>(7, 1));
  CHECK(validate_transform(g).empty());

  // 3 source gadgets (2 nodes each), 4 encoder gadgets (2 nodes each),
  // 3 decoder sinks
  CHECK(g.nodes.size() == 17);
  CHECK(g.edges.size() == 21);
  CHECK(g.source_nodes.size() == 3);
  CHECK(g.sink_nodes == std::vector<std::string>{"d5", "d6", "d7"});
  const std::vector<std::pair<std::string, int>> want_demands = {
      {"d5", 3}, {"d6", 2}, {"d7", 1}};
  CHECK(g.demands == want_demands);

  std::map<int, std::string> carrier;
  for (const auto& [label, node] : g.msg2node) carrier[label] = node;
  CHECK(carrier[1] == "v1");
  CHECK(carrier[2] == "v2");
  CHECK(carrier[3] == "v3");
  CHECK(carrier[4] == "v4_2");
  CHECK(carrier[7] == "v7_2");

  // encoder gadget for message 4: inputs v1, v2 into v4_1, bridge to v4_2
  CHECK(count_edges(g, "v1", "v4_1") == 1);
  CHECK(count_edges(g, "v2", "v4_1") == 1);
  CHECK(count_edges(g, "v4_1", "v4_2") == 1);
  // decoder for relation 5 reads messages 1 and 6
  CHECK(count_edges(g, "v1", "d5") == 1);
  CHECK(count_edges(g, "v6_2", "d5") == 1);
}

TEST_CASE("rates widen gadgets and color parallel edges consecutively") {
  const NetworkInstance net = catalog::network("fano");
  const MultigraphInstance g = transform(net, std::vector<int>(7, 2));
  CHECK(validate_transform(g).empty());

  // doubling every rate doubles source nodes per message and every bundle
  CHECK(g.source_nodes.size() == 6);
  CHECK(count_edges(g, "v1", "v4_1") == 2);
  CHECK(count_edges(g, "v4_1", "v4_2") == 2);
  std::set<int> colors;
  for (const auto& e : g.edges)
    if (e.tail == "v1" && e.head == "v4_1") colors.insert(e.color);
  CHECK(colors == std::set<int>{1, 2});
}

TEST_CASE("node list comes out in a topological order") {
  const NetworkInstance net = catalog::network("fano");
  const MultigraphInstance g = transform(net, std::vector<int>(7, 1));
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) pos[g.nodes[i]] = i;
  for (const auto& e : g.edges) CHECK(pos.at(e.tail) < pos.at(e.head));
}

TEST_CASE("encoders are expanded lowest eligible index first") {
  // relation 1 depends on relation 2's output, so 2 must be expanded first
  NetworkInstance net;
  net.k = 1;
  net.N = 3;
  net.relations = {{{2}, {2, 3}}, {{1}, {1, 2}}};
  const MultigraphInstance g = transform(net, {1, 1, 1});
  CHECK(validate_transform(g).empty());
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) pos[g.nodes[i]] = i;
  CHECK(pos.at("v2_2") < pos.at("v3_1"));
}

TEST_CASE("an unresolvable ordering names the stuck relations") {
  NetworkInstance net;
  net.k = 1;
  net.N = 3;
  net.relations = {{{2}, {2, 3}}, {{3}, {3, 2}}};
  CHECK_THROWS_WITH_AS(transform(net, {1, 1, 1}),
                       "transform: unresolvable constraint ordering; stuck "
                       "constraints: 1 2",
                       error);
}

TEST_CASE("a doubly defined message is rejected") {
  NetworkInstance net;
  net.k = 1;
  net.N = 2;
  net.relations = {{{1}, {1, 2}}, {{1}, {1, 2}}};
  CHECK_THROWS_WITH_AS(transform(net, {1, 1}),
                       "transform: message 2 defined more than once", error);
}

TEST_CASE("rates are checked against the label count and positivity") {
  const NetworkInstance net = catalog::network("fano");
  CHECK_THROWS_AS(transform(net, {1, 1, 1}), error);
  CHECK_THROWS_AS(transform(net, {1, 1, 1, 1, 1, 1, 0}), error);
}

TEST_CASE("multidemand decoders become one sink per demanded message") {
  NetworkInstance net;
  net.k = 2;
  net.N = 3;
  net.relations = {{{1, 2}, {1, 2, 3}}, {{3}, {1, 2, 3}}};
  const MultigraphInstance g = transform(net, {1, 1, 2});
  CHECK(validate_transform(g).empty());
  CHECK(g.sink_nodes == std::vector<std::string>{"d2_1", "d2_2"});
  const std::vector<std::pair<std::string, int>> want = {{"d2_1", 1},
                                                         {"d2_2", 2}};
  CHECK(g.demands == want);
  CHECK(count_edges(g, "v3_2", "d2_1") == 2);
}

TEST_CASE("the validator reports structural damage") {
  MultigraphInstance g;
  g.nodes = {"a", "b", "b"};
  g.edges = {{"a", "b", 1}, {"a", "b", 1}, {"b", "a", 1}, {"a", "zz", 1}};
  g.sink_nodes = {"b", "a"};
  g.demands = {{"b", 1}, {"b", 1}};
  g.msg2node = {{1, "a"}, {5, "a"}};
  g.rates = {3};
  const std::vector<std::string> report = validate_transform(g);
  auto has = [&](const std::string& needle) {
    return std::any_of(report.begin(), report.end(), [&](const std::string& s) {
      return s.find(needle) != std::string::npos;
    });
  };
  CHECK(has("duplicate node: b"));
  CHECK(has("repeated color 1 between a and b"));
  CHECK(has("edge head not a node: zz"));
  CHECK(has("not acyclic"));
  CHECK(has("sink demands more than one message: b"));
  CHECK(has("sink without a demand: a"));
  CHECK(has("message label out of range: 5"));
  CHECK(has("message 1 node a has in-degree 1 but rate 3"));
}

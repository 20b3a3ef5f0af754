#include "clrp/nc_transform.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace clrp {

namespace {

struct Builder {
  MultigraphInstance g;
  std::map<std::string, int> node_index;
  std::map<std::pair<std::string, std::string>, int> next_color;
  std::map<int, std::string> msgmap;

  void add_node(const std::string& name) {
    if (!node_index.emplace(name, static_cast<int>(g.nodes.size())).second)
      throw error("transform: duplicate node name " + name);
    g.nodes.push_back(name);
  }

  void add_edges(const std::string& tail, const std::string& head, int count) {
    int& c = next_color[{tail, head}];
    for (int t = 0; t < count; ++t) g.edges.push_back({tail, head, ++c});
  }

  void define_msg(int label, const std::string& node) {
    if (!msgmap.emplace(label, node).second)
      throw error("transform: message " + std::to_string(label) +
                  " defined more than once");
  }

  const std::string& node_of(int label) const {
    auto it = msgmap.find(label);
    if (it == msgmap.end())
      throw error("transform: message " + std::to_string(label) +
                  " used before it is defined");
    return it->second;
  }
};

/// Message labels a relation defines: the right side minus the left side.
std::vector<int> outputs_of(const NetworkInstance& net, std::size_t idx) {
  const auto& [in, inout] = net.relations[idx];
  std::vector<int> out;
  for (int v : inout)
    if (std::find(in.begin(), in.end(), v) == in.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MultigraphInstance transform(const NetworkInstance& net,
                             const std::vector<int>& rates) {
  net.validate();
  if (static_cast<int>(rates.size()) != net.N)
    throw error("transform: need one rate per message label");
  for (int r : rates)
    if (r < 1) throw error("transform: rates must be positive");

  // Every message is defined exactly once: sources define 1..k, each encoder
  // output defines its label. Checked up front so the report names the
  // message, not a gadget node.
  {
    std::set<int> defined;
    for (int i = 1; i <= net.k; ++i) defined.insert(i);
    for (std::size_t idx = 0; idx < net.relations.size(); ++idx) {
      if (net.relation_is_decoder(idx)) continue;
      for (int o : outputs_of(net, idx))
        if (!defined.insert(o).second)
          throw error("transform: message " + std::to_string(o) +
                      " defined more than once");
    }
  }

  Builder b;
  b.g.rates = rates;

  // Source gadgets: unit-rate source nodes feeding a collector per message.
  for (int i = 1; i <= net.k; ++i) {
    const std::string collector = "v" + std::to_string(i);
    for (int t = 1; t <= rates[std::size_t(i - 1)]; ++t) {
      const std::string s = collector + "_" + std::to_string(t);
      b.add_node(s);
      b.g.source_nodes.emplace_back(s, i);
    }
    b.add_node(collector);
    for (int t = 1; t <= rates[std::size_t(i - 1)]; ++t)
      b.add_edges(collector + "_" + std::to_string(t), collector, 1);
    b.define_msg(i, collector);
  }

  // Encoding gadgets, lowest eligible index first.
  std::vector<std::size_t> encoders, decoders;
  for (std::size_t idx = 0; idx < net.relations.size(); ++idx)
    (net.relation_is_decoder(idx) ? decoders : encoders).push_back(idx);

  std::set<std::size_t> pending(encoders.begin(), encoders.end());
  while (!pending.empty()) {
    std::size_t chosen = SIZE_MAX;
    for (std::size_t idx : pending) {
      bool ready = true;
      for (int i : net.relations[idx].first)
        if (!b.msgmap.count(i)) {
          ready = false;
          break;
        }
      if (ready) {
        chosen = idx;
        break;
      }
    }
    if (chosen == SIZE_MAX) {
      std::ostringstream os;
      os << "transform: unresolvable constraint ordering; stuck constraints:";
      for (std::size_t idx : pending) os << ' ' << (idx + 1);
      throw error(os.str());
    }
    pending.erase(chosen);
    for (int o : outputs_of(net, chosen)) {
      const std::string v1 = "v" + std::to_string(o) + "_1";
      const std::string v2 = "v" + std::to_string(o) + "_2";
      b.add_node(v1);
      b.add_node(v2);
      b.define_msg(o, v2);
      for (int i : net.relations[chosen].first)
        b.add_edges(b.node_of(i), v1, rates[std::size_t(i - 1)]);
      b.add_edges(v1, v2, rates[std::size_t(o - 1)]);
    }
  }

  // Decoder gadgets.
  for (std::size_t idx : decoders) {
    const std::vector<int> outs = outputs_of(net, idx);
    const std::string base = "d" + std::to_string(idx + 1);
    if (outs.size() == 1) {
      b.add_node(base);
      for (int i : net.relations[idx].first)
        b.add_edges(b.node_of(i), base, rates[std::size_t(i - 1)]);
      b.g.sink_nodes.push_back(base);
      b.g.demands.emplace_back(base, outs.front());
    } else {
      for (int o : outs) {
        const std::string name = base + "_" + std::to_string(o);
        b.add_node(name);
        for (int i : net.relations[idx].first)
          b.add_edges(b.node_of(i), name, rates[std::size_t(i - 1)]);
        b.g.sink_nodes.push_back(name);
        b.g.demands.emplace_back(name, o);
      }
    }
  }

  for (const auto& [label, node] : b.msgmap) b.g.msg2node.emplace_back(label, node);
  return b.g;
}

std::vector<std::string> validate_transform(const MultigraphInstance& g) {
  std::vector<std::string> report;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (!index.emplace(g.nodes[i], static_cast<int>(i)).second)
      report.push_back("duplicate node: " + g.nodes[i]);
  }

  std::map<std::string, int> indeg;
  std::map<std::pair<std::string, std::string>, std::set<int>> colors;
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (const auto& e : g.edges) {
    auto ti = index.find(e.tail), hi = index.find(e.head);
    if (ti == index.end()) report.push_back("edge tail not a node: " + e.tail);
    if (hi == index.end()) report.push_back("edge head not a node: " + e.head);
    if (ti == index.end() || hi == index.end()) continue;
    adj[std::size_t(ti->second)].push_back(hi->second);
    ++indeg[e.head];
    if (!colors[{e.tail, e.head}].insert(e.color).second)
      report.push_back("repeated color " + std::to_string(e.color) +
                       " between " + e.tail + " and " + e.head);
  }

  // Acyclicity by Kahn's algorithm.
  {
    std::vector<int> deg(g.nodes.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (int w : adj[v]) ++deg[std::size_t(w)];
    std::deque<int> ready;
    for (std::size_t v = 0; v < deg.size(); ++v)
      if (deg[v] == 0) ready.push_back(static_cast<int>(v));
    std::size_t seen = 0;
    while (!ready.empty()) {
      int v = ready.front();
      ready.pop_front();
      ++seen;
      for (int w : adj[std::size_t(v)])
        if (--deg[std::size_t(w)] == 0) ready.push_back(w);
    }
    if (seen != g.nodes.size()) report.push_back("graph is not acyclic");
  }

  std::set<std::string> sinks(g.sink_nodes.begin(), g.sink_nodes.end());
  std::set<std::string> demanded;
  for (const auto& [sink, msg] : g.demands) {
    if (!sinks.count(sink))
      report.push_back("demand on non-sink node: " + sink);
    if (!demanded.insert(sink).second)
      report.push_back("sink demands more than one message: " + sink);
    (void)msg;
  }
  for (const std::string& s : g.sink_nodes)
    if (!demanded.count(s)) report.push_back("sink without a demand: " + s);

  for (const auto& [label, node] : g.msg2node) {
    if (label < 1 || label > static_cast<int>(g.rates.size())) {
      report.push_back("message label out of range: " + std::to_string(label));
      continue;
    }
    const int want = g.rates[std::size_t(label - 1)];
    const int have = indeg.count(node) ? indeg[node] : 0;
    if (want != have)
      report.push_back("message " + std::to_string(label) + " node " + node +
                       " has in-degree " + std::to_string(have) +
                       " but rate " + std::to_string(want));
  }
  return report;
}

}  // namespace clrp

#include "clrp/catalog.hpp"

#include <algorithm>

#include "clrp/io.hpp"

namespace clrp::catalog {

namespace {

using Rel = std::pair<std::vector<int>, std::vector<int>>;

NetworkInstance make_net(int k, int N, std::vector<Rel> rels) {
  NetworkInstance net;
  net.k = k;
  net.N = N;
  net.relations = std::move(rels);
  net.validate();
  return net;
}

}  // namespace

const std::vector<std::string>& network_names() {
  static const std::vector<std::string> names = {
      "fano", "nonfano", "vamos", "u24", "hn1", "fig6", "mdcs"};
  return names;
}

NetworkInstance network(const std::string& name) {
  if (name == "fano")
    return make_net(3, 7,
                    {{{1, 2}, {1, 2, 4}},
                     {{2, 3}, {2, 3, 5}},
                     {{4, 5}, {4, 5, 6}},
                     {{3, 4}, {3, 4, 7}},
                     {{1, 6}, {3, 1, 6}},
                     {{6, 7}, {2, 6, 7}},
                     {{5, 7}, {1, 5, 7}}});
  if (name == "nonfano")
    return make_net(3, 7,
                    {{{1, 2, 3}, {1, 2, 3, 4}},
                     {{1, 2}, {1, 2, 5}},
                     {{1, 3}, {1, 3, 6}},
                     {{2, 3}, {2, 3, 7}},
                     {{4, 5}, {3, 4, 5}},
                     {{4, 6}, {2, 4, 6}},
                     {{4, 7}, {1, 4, 7}},
                     {{5, 6, 7}, {1, 2, 3, 5, 6, 7}}});
  if (name == "vamos")
    return make_net(4, 8,
                    {{{1, 2, 3, 4}, {1, 2, 3, 4, 5}},
                     {{1, 2, 5}, {1, 2, 5, 6}},
                     {{2, 3, 6}, {2, 3, 6, 7}},
                     {{3, 4, 7}, {3, 4, 7, 8}},
                     {{4, 8}, {2, 4, 8}},
                     {{2, 3, 4, 8}, {1, 2, 3, 4, 8}},
                     {{1, 4, 5, 8}, {1, 2, 3, 4, 5, 8}},
                     {{1, 2, 3, 7}, {1, 2, 3, 4, 7}},
                     {{1, 5, 7}, {1, 3, 5, 7}}});
  if (name == "u24")
    return make_net(2, 4,
                    {{{1, 2}, {1, 2, 3}},
                     {{1, 3}, {1, 2, 3}},
                     {{2, 3}, {1, 2, 3}},
                     {{1, 2}, {1, 2, 4}},
                     {{1, 4}, {1, 2, 4}},
                     {{3, 4}, {1, 3, 4}},
                     {{3, 4}, {2, 3, 4}},
                     {{2, 4}, {1, 2, 4}}});
  if (name == "hn1")
    return make_net(3, 6,
                    {{{1, 2, 3}, {1, 2, 3, 4}},
                     {{1, 3, 4}, {1, 3, 4, 5}},
                     {{3, 4, 5}, {3, 4, 5, 6}},
                     {{4, 5}, {1, 3, 4, 5}},
                     {{4, 6}, {2, 3, 4, 6}},
                     {{5, 6}, {2, 3, 5, 6}}});
  if (name == "fig6")
    return make_net(2, 5,
                    {{{1, 2}, {1, 2, 3}},
                     {{1, 2}, {1, 2, 4}},
                     {{3, 4}, {3, 4, 5}},
                     {{5}, {1, 5}}});
  if (name == "mdcs")
    return make_net(3, 7,
                    {{{1, 2, 3}, {1, 2, 3, 4}},
                     {{1, 2, 3}, {1, 2, 3, 5}},
                     {{1, 2, 3}, {1, 2, 3, 6}},
                     {{1, 2, 3}, {1, 2, 3, 7}},
                     {{4}, {1, 4}},
                     {{5}, {1, 5}},
                     {{4, 5}, {1, 2, 4, 5}},
                     {{6, 7}, {1, 2, 6, 7}},
                     {{4, 6}, {1, 2, 3, 4, 6}},
                     {{5, 7}, {1, 2, 3, 5, 7}}});
  throw error("unknown catalog network '" + name + "'");
}

const std::vector<std::string>& access_names() {
  static const std::vector<std::string> names = {"benaloh"};
  return names;
}

AccessStructure access(const std::string& name) {
  if (name == "benaloh") {
    AccessStructure acc;
    acc.N = 5;
    acc.minimal_auth = {{2, 3}, {3, 4}, {4, 5}};
    acc.validate();
    return acc;
  }
  throw error("unknown catalog access structure '" + name + "'");
}

const std::vector<std::string>& rank_vector_names() {
  static const std::vector<std::string> names = {"linrank6", "u24rank"};
  return names;
}

RankVector rank_vector(const std::string& name) {
  RankVector h;
  if (name == "linrank6") {
    h.N = 6;
    h.entries = {1, 1, 2, 1, 2, 2, 2, 2, 3, 3, 4, 3, 4, 4, 4, 2,
                 3, 3, 4, 3, 4, 4, 4, 4, 5, 5, 6, 5, 6, 6, 6, 4,
                 5, 5, 6, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,
                 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6};
    return h;
  }
  if (name == "u24rank") {
    h.N = 4;
    h.entries = {1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2};
    return h;
  }
  throw error("unknown catalog rank vector '" + name + "'");
}

bool has_entry(const std::string& name) {
  auto in = [&](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), name) != v.end();
  };
  return in(network_names()) || in(access_names()) || in(rank_vector_names());
}

std::string dump(const std::string& name) {
  const auto& nets = network_names();
  if (std::find(nets.begin(), nets.end(), name) != nets.end())
    return format_network(network(name));
  const auto& accs = access_names();
  if (std::find(accs.begin(), accs.end(), name) != accs.end())
    return format_access_structure(access(name));
  const auto& rvs = rank_vector_names();
  if (std::find(rvs.begin(), rvs.end(), name) != rvs.end()) {
    const RankVector h = rank_vector(name);
    std::string s;
    for (std::size_t i = 0; i < h.entries.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(h.entries[i]);
    }
    return s + "\n";
  }
  throw error("unknown catalog entry '" + name + "'");
}

}  // namespace clrp::catalog

#include "clrp/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace clrp {

namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw error("line " + std::to_string(lineno) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Non-blank, non-comment lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream is(text);
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.emplace_back(no, std::move(t));
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(std::move(t));
  return out;
}

int parse_int(const std::string& s, int lineno, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    fail(lineno, std::string("expected integer ") + what + ", got '" + s + "'");
  }
  if (pos != s.size())
    fail(lineno, std::string("trailing characters after integer ") + what +
                     " in '" + s + "'");
  return v;
}

long long parse_ll(const std::string& s, int lineno) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(lineno, "expected integer, got '" + s + "'");
  }
  if (pos != s.size()) fail(lineno, "trailing characters in '" + s + "'");
  return v;
}

/// `<key>=<int>` token
int parse_kv(const std::string& tok, const char* key, int lineno) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0)
    fail(lineno, "expected '" + prefix + "<int>', got '" + tok + "'");
  return parse_int(tok.substr(prefix.size()), lineno, key);
}

/// `{1,2,3}` (spaces allowed); `{}` is the empty set.
std::vector<int> parse_set(const std::string& s, int lineno) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    fail(lineno, "expected a set literal {...}, got '" + s + "'");
  std::vector<int> out;
  std::string inner = t.substr(1, t.size() - 2);
  if (trim(inner).empty()) return out;
  std::istringstream is(inner);
  std::string item;
  while (std::getline(is, item, ','))
    out.push_back(parse_int(trim(item), lineno, "set element"));
  return out;
}

std::string format_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string format_row(const Row& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(r[i]);
  }
  return s;
}

std::string basis_block(const Subspace& v) {
  if (v.k == 0) return "(zero)\n";
  std::string s;
  for (int row = 0; row < v.k; ++row) {
    for (int col = 0; col < v.r; ++col) {
      if (col) s += ' ';
      const felt x = v.basis.at(row, col);
      s += (x == 0) ? "." : std::to_string(int(x));
    }
    s += '\n';
  }
  return s;
}

}  // namespace

NetworkInstance parse_network(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw error("line 1: empty network description");
  NetworkInstance net;
  {
    const auto& [no, line] = lines.front();
    const auto toks = tokens_of(line);
    if (toks.size() != 3 || toks[0] != "network")
      fail(no, "expected header 'network k=<k> n=<N>'");
    net.k = parse_kv(toks[1], "k", no);
    net.N = parse_kv(toks[2], "n", no);
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [no, line] = lines[li];
    if (line.rfind("con", 0) != 0) fail(no, "expected 'con {...} -> {...}'");
    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) fail(no, "relation is missing '->'");
    std::string left = trim(line.substr(3, arrow - 3));
    std::string right = trim(line.substr(arrow + 2));
    net.relations.emplace_back(parse_set(left, no), parse_set(right, no));
  }
  try {
    net.validate();
  } catch (const error& e) {
    throw error(std::string("network description invalid: ") + e.what());
  }
  return net;
}

std::string format_network(const NetworkInstance& net) {
  std::string s = "network k=" + std::to_string(net.k) +
                  " n=" + std::to_string(net.N) + "\n";
  for (const auto& [in, inout] : net.relations)
    s += "con " + format_set(in) + " -> " + format_set(inout) + "\n";
  return s;
}

AccessStructure parse_access_structure(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw error("line 1: empty access structure description");
  AccessStructure acc;
  {
    const auto& [no, line] = lines.front();
    const auto toks = tokens_of(line);
    if (toks.size() != 2 || toks[0] != "ss")
      fail(no, "expected header 'ss n=<N>'");
    acc.N = parse_kv(toks[1], "n", no);
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [no, line] = lines[li];
    if (line.rfind("auth", 0) != 0) fail(no, "expected 'auth {...}'");
    acc.minimal_auth.push_back(parse_set(trim(line.substr(4)), no));
  }
  try {
    acc.validate();
  } catch (const error& e) {
    throw error(std::string("access structure invalid: ") + e.what());
  }
  return acc;
}

std::string format_access_structure(const AccessStructure& acc) {
  std::string s = "ss n=" + std::to_string(acc.N) + "\n";
  for (const auto& a : acc.minimal_auth) s += "auth " + format_set(a) + "\n";
  return s;
}

RankVector parse_rank_vector(const std::string& text) {
  std::string flat;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
  if (flat.empty()) throw error("rank vector: empty input");
  std::vector<int> entries;
  std::istringstream is(flat);
  std::string item;
  while (std::getline(is, item, ','))
    entries.push_back(parse_int(item, 1, "rank entry"));
  int N = 0;
  while (N <= 16 && (std::size_t(1) << N) - 1 < entries.size()) ++N;
  if (N > 16 || (std::size_t(1) << N) - 1 != entries.size())
    throw error("rank vector: length must be 2^N-1 for some N <= 16, got " +
                std::to_string(entries.size()));
  RankVector h;
  h.N = N;
  h.entries = std::move(entries);
  return h;
}

PolyhedralBlock parse_polyhedral(const std::string& text) {
  const auto lines = content_lines(text);
  PolyhedralBlock b;
  std::size_t li = 0;
  auto need = [&](const char* what) -> const std::pair<int, std::string>& {
    if (li >= lines.size())
      throw error(std::string("polyhedral block ended early, expected ") + what);
    return lines[li];
  };
  {
    const auto& [no, line] = need("representation header");
    if (line == "H-representation")
      b.is_h = true;
    else if (line == "V-representation")
      b.is_h = false;
    else
      fail(no, "expected 'H-representation' or 'V-representation'");
    ++li;
  }
  {
    const auto& [no, line] = need("'begin'");
    if (line.rfind("linearity", 0) == 0) {
      const auto toks = tokens_of(line);
      if (toks.size() < 2) fail(no, "linearity line needs a count");
      const int cnt = parse_int(toks[1], no, "linearity count");
      if (static_cast<int>(toks.size()) != cnt + 2)
        fail(no, "linearity count does not match the indices given");
      for (int t = 0; t < cnt; ++t)
        b.linearity.push_back(parse_int(toks[std::size_t(t) + 2], no, "index"));
      ++li;
    }
  }
  {
    const auto& [no, line] = need("'begin'");
    if (line != "begin") fail(no, "expected 'begin'");
    ++li;
  }
  int nrows = 0;
  {
    const auto& [no, line] = need("size line '<rows> <cols> rational'");
    const auto toks = tokens_of(line);
    if (toks.size() != 3 || toks[2] != "rational")
      fail(no, "expected '<rows> <cols> rational'");
    nrows = parse_int(toks[0], no, "row count");
    b.cols = parse_int(toks[1], no, "column count");
    ++li;
  }
  for (int rix = 0; rix < nrows; ++rix) {
    const auto& [no, line] = need("a matrix row");
    const auto toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != b.cols)
      fail(no, "expected " + std::to_string(b.cols) + " entries");
    Row row;
    for (const auto& t : toks) row.push_back(parse_ll(t, no));
    b.rows.push_back(std::move(row));
    ++li;
  }
  {
    const auto& [no, line] = need("'end'");
    if (line != "end") fail(no, "expected 'end'");
    ++li;
  }
  if (li != lines.size()) fail(lines[li].first, "trailing content after 'end'");
  for (int ix : b.linearity)
    if (ix < 1 || ix > nrows)
      throw error("polyhedral block: linearity index out of range");
  return b;
}

std::string format_hrep(const HRep& h) {
  std::string s = "H-representation\n";
  if (!h.eq.empty()) {
    s += "linearity " + std::to_string(h.eq.size());
    for (std::size_t i = 1; i <= h.eq.size(); ++i) s += ' ' + std::to_string(i);
    s += '\n';
  }
  s += "begin\n";
  s += std::to_string(h.eq.size() + h.ineq.size()) + ' ' +
       std::to_string(h.dim + 1) + " rational\n";
  for (const Row& r : h.eq) s += "0 " + format_row(r) + "\n";
  for (const Row& r : h.ineq) s += "0 " + format_row(r) + "\n";
  s += "end\n";
  return s;
}

std::string format_vrep(const Cone& c) {
  std::string s = "V-representation\n";
  if (!c.lineality.empty()) {
    s += "linearity " + std::to_string(c.lineality.size());
    for (std::size_t i = 1; i <= c.lineality.size(); ++i)
      s += ' ' + std::to_string(i);
    s += '\n';
  }
  s += "begin\n";
  s += std::to_string(c.lineality.size() + c.rays.size()) + ' ' +
       std::to_string(c.dim + 1) + " rational\n";
  for (const Row& r : c.lineality) s += "0 " + format_row(r) + "\n";
  for (const Row& r : c.rays) s += "0 " + format_row(r) + "\n";
  s += "end\n";
  return s;
}

std::string format_edge_list(const MultigraphInstance& g) {
  std::string s;
  for (const auto& n : g.nodes) s += "node " + n + "\n";
  for (const auto& e : g.edges)
    s += "edge " + e.tail + ' ' + e.head + ' ' + std::to_string(e.color) + "\n";
  for (const auto& [node, msg] : g.source_nodes)
    s += "source " + node + ' ' + std::to_string(msg) + "\n";
  for (const auto& [sink, msg] : g.demands)
    s += "sink " + sink + " demands " + std::to_string(msg) + "\n";
  return s;
}

MultigraphInstance parse_edge_list(const std::string& text) {
  MultigraphInstance g;
  for (const auto& [no, line] : content_lines(text)) {
    const auto toks = tokens_of(line);
    if (toks[0] == "node") {
      if (toks.size() != 2) fail(no, "expected 'node <name>'");
      g.nodes.push_back(toks[1]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4) fail(no, "expected 'edge <tail> <head> <color>'");
      g.edges.push_back({toks[1], toks[2], parse_int(toks[3], no, "color")});
    } else if (toks[0] == "source") {
      if (toks.size() != 3) fail(no, "expected 'source <name> <msg>'");
      g.source_nodes.emplace_back(toks[1], parse_int(toks[2], no, "message"));
    } else if (toks[0] == "sink") {
      if (toks.size() != 4 || toks[2] != "demands")
        fail(no, "expected 'sink <name> demands <msg>'");
      g.sink_nodes.push_back(toks[1]);
      g.demands.emplace_back(toks[1], parse_int(toks[3], no, "message"));
    } else {
      fail(no, "unknown directive '" + toks[0] + "'");
    }
  }
  return g;
}

std::string format_witness(const Witness& w) {
  std::string s;
  for (int i = 0; i < w.rep.ground_size(); ++i) {
    s += std::to_string(i + 1) + "->" + std::to_string(w.pmap[std::size_t(i)] + 1) +
         "\n";
    s += basis_block(w.rep.subspace(i));
    s += "\n";
  }
  return s;
}

std::string format_certificate(const PMap& phi) {
  std::string s;
  for (std::size_t i = 0; i < phi.size(); ++i)
    s += std::to_string(i + 1) + "->" + std::to_string(phi[i] + 1) + "\n";
  return s;
}

std::string catalog_line(const PolymatroidRep& rep) {
  std::string s = std::to_string(rep.ambient()) + ' ' + std::to_string(rep.q()) + " [";
  for (int i = 0; i < rep.ground_size(); ++i) {
    if (i) s += ';';
    const Subspace& v = rep.subspace(i);
    s += std::to_string(v.k) + ":";
    for (int row = 0; row < v.k; ++row) {
      if (row) s += ',';
      for (int col = 0; col < v.r; ++col) {
        if (col) s += ' ';
        s += std::to_string(int(v.basis.at(row, col)));
      }
    }
  }
  return s + "]";
}

std::string format_stats_csv(const std::vector<LevelStat>& stats) {
  std::ostringstream os;
  os << "r,i,j,candidates,kept,rank_evals,millis\n";
  for (const auto& s : stats)
    os << s.r << ',' << s.i << ',' << s.j << ',' << s.candidates << ','
       << s.kept << ',' << s.rank_evals << ',' << std::fixed
       << std::setprecision(3) << s.millis << '\n';
  return os.str();
}

namespace {

std::string stats_block(const std::vector<LevelStat>& stats) {
  std::string s = "stats:\nr,i,j,candidates,kept,rank_evals\n";
  for (const auto& st : stats)
    s += std::to_string(st.r) + ',' + std::to_string(st.i) + ',' +
         std::to_string(st.j) + ',' + std::to_string(st.candidates) + ',' +
         std::to_string(st.kept) + ',' + std::to_string(st.rank_evals) + '\n';
  return s;
}

}  // namespace

std::string format_report(const ProverResult& res) {
  std::string s = "verdict: ";
  s += verdict_name(res.verdict);
  s += '\n';
  if (!res.note.empty()) s += "note: " + res.note + "\n";
  if (res.witness) {
    s += "ambient: " + std::to_string(res.witness->r) + "\n";
    s += "simple-classes: " + std::to_string(res.witness->simple_size) + "\n";
    s += "witness:\n" + format_witness(*res.witness);
  }
  s += stats_block(res.stats);
  s += "rank-evals: " + std::to_string(res.total_rank_evals) + "\n";
  return s;
}

std::string format_region_report(const RegionResult& res) {
  std::string s = "verdict: ";
  s += verdict_name(res.verdict);
  s += '\n';
  if (!res.note.empty()) s += "note: " + res.note + "\n";
  s += "vectors: " + std::to_string(res.vectors.size()) + "\n";
  for (const auto& v : res.vectors) {
    std::string row;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) row += ',';
      row += std::to_string(v[i]);
    }
    s += row + "\n";
  }
  s += stats_block(res.stats);
  s += "rank-evals: " + std::to_string(res.total_rank_evals) + "\n";
  return s;
}

namespace {

nlohmann::json stats_json(const std::vector<LevelStat>& stats) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : stats)
    arr.push_back({{"r", s.r},
                   {"i", s.i},
                   {"j", s.j},
                   {"candidates", s.candidates},
                   {"kept", s.kept},
                   {"rank_evals", s.rank_evals},
                   {"millis", s.millis}});
  return arr;
}

}  // namespace

std::string result_json(const ProverResult& res) {
  nlohmann::json j;
  j["verdict"] = verdict_name(res.verdict);
  j["note"] = res.note;
  if (res.witness) {
    nlohmann::json w;
    w["ambient"] = res.witness->r;
    w["simple_size"] = res.witness->simple_size;
    nlohmann::json pmap = nlohmann::json::array();
    for (int v : res.witness->pmap) pmap.push_back(v + 1);
    w["pmap"] = pmap;
    nlohmann::json subs = nlohmann::json::array();
    for (int i = 0; i < res.witness->rep.ground_size(); ++i) {
      const Subspace& v = res.witness->rep.subspace(i);
      nlohmann::json rows = nlohmann::json::array();
      for (int row = 0; row < v.k; ++row) {
        nlohmann::json r = nlohmann::json::array();
        for (int col = 0; col < v.r; ++col) r.push_back(int(v.basis.at(row, col)));
        rows.push_back(r);
      }
      subs.push_back({{"dim", v.k}, {"basis", rows}});
    }
    w["subspaces"] = subs;
    j["witness"] = w;
  }
  j["stats"] = stats_json(res.stats);
  j["total_rank_evals"] = res.total_rank_evals;
  j["total_ms"] = res.total_ms;
  return j.dump(2) + "\n";
}

std::string region_json(const RegionResult& res) {
  nlohmann::json j;
  j["verdict"] = verdict_name(res.verdict);
  j["note"] = res.note;
  j["vectors"] = res.vectors;
  j["stats"] = stats_json(res.stats);
  j["total_rank_evals"] = res.total_rank_evals;
  j["total_ms"] = res.total_ms;
  return j.dump(2) + "\n";
}

}  // namespace clrp

#include "netpot/network.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

#include "netpot/errors.hpp"

namespace netpot {

Network Network::from_edges(const std::vector<Edge>& edges) {
  Network net;
  auto intern = [&net](const std::string& name) {
    auto [it, fresh] = net.index_.try_emplace(name, static_cast<int>(net.names_.size()));
    if (fresh) net.names_.push_back(name);
    return it->second;
  };

  std::vector<std::tuple<int, int, Rational>> dense;
  dense.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidConductance("self-loop at vertex '" + e.u + "'");
    if (e.conductance <= 0)
      throw InvalidConductance("edge {" + e.u + "," + e.v + "} has conductance " +
                               to_string(e.conductance));
    int u = intern(e.u);  // intern in listed order (argument evaluation
    int v = intern(e.v);  // order inside a call is unspecified)
    dense.emplace_back(u, v, e.conductance);
  }

  const int n = net.order();
  if (n < 2) throw DisconnectedGraph("a network needs at least one edge and two vertices");

  net.cond_.assign(n, std::vector<Rational>(n, Rational(0)));
  for (auto& [u, v, c] : dense) {
    if (net.cond_[u][v] != 0)
      throw DuplicateEdge("edge {" + net.names_[u] + "," + net.names_[v] + "} listed twice");
    net.cond_[u][v] = c;
    net.cond_[v][u] = c;
  }

  net.adj_.assign(n, {});
  net.degree_.assign(n, Rational(0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (net.cond_[u][v] > 0) {
        net.adj_[u].push_back(v);
        net.degree_[u] += net.cond_[u][v];
      }

  // connectivity
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : net.adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  if (reached != n) throw DisconnectedGraph("graph has more than one component");
  return net;
}

int Network::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownVertex("'" + name + "'");
  return it->second;
}

bool Network::has_unit_conductances() const {
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (cond_[u][v] != 1) return false;
  return true;
}

Network make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw ParamOutOfRange("complete bipartite sides must be >= 1");
  auto side_names = [](char prefix, int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
  };
  std::vector<std::string> va = side_names('a', a), vb = side_names('b', b);

  std::vector<Edge> edges;
  // The a-side has degree b; list the higher-degree side first (a-side on ties).
  const bool a_first = b >= a;
  for (const auto& u : (a_first ? va : vb))
    for (const auto& v : (a_first ? vb : va)) edges.push_back({u, v, 1});
  return Network::from_edges(edges);
}

Network make_subdivision(const Network& g) {
  if (!g.has_unit_conductances())
    throw InvalidConductance("subdivision is defined for unit-conductance graphs");
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      std::string w = g.vertex_name(u) + "|" + g.vertex_name(v);
      edges.push_back({g.vertex_name(u), w, 1});
      edges.push_back({g.vertex_name(v), w, 1});
    }
  return Network::from_edges(edges);
}

DistanceTable distances(const Network& net) {
  const int n = net.order();
  DistanceTable table;
  table.d.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& row = table.d[s];
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : net.neighbors(u))
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
    }
    table.diameter = std::max(table.diameter, *std::max_element(row.begin(), row.end()));
  }
  return table;
}

int DistanceTable::ball_size(int y, int i) const {
  int count = 0;
  for (int x = 0; x < static_cast<int>(d.size()); ++x)
    if (d[x][y] <= i) ++count;
  return count;
}

RationalMatrix laplacian(const Network& net) {
  const int n = net.order();
  RationalMatrix L(n);
  for (int x = 0; x < n; ++x) {
    L(x, x) = net.degree(x);
    for (int y : net.neighbors(x)) L(x, y) = -net.conductance(x, y);
  }
  return L;
}

std::vector<Edge> parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string u, v, c;
    if (!(tokens >> u) || u[0] == '#') continue;
    if (!(tokens >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v [p/q]'");
    Edge e{u, v, 1};
    if (tokens >> c) e.conductance = parse_rational(c);
    std::string extra;
    if (tokens >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    edges.push_back(std::move(e));
  }
  return edges;
}

Network read_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return Network::from_edges(parse_edge_list(in));
}

}  // namespace netpot

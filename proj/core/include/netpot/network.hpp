#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "netpot/matrix.hpp"
#include "netpot/rational.hpp"

namespace netpot {

struct Edge {
  std::string u;
  std::string v;
  Rational conductance = 1;
};

/// Finite connected weighted graph without loops. Vertex ids are opaque
/// strings mapped to dense indices in insertion order; all matrix output
/// follows that order. Immutable after construction.
class Network {
 public:
  /// Builds a network from an edge list. Throws DuplicateEdge,
  /// InvalidConductance (non-positive weight or self-loop) or
  /// DisconnectedGraph.
  static Network from_edges(const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int i) const { return names_[i]; }

  /// Dense index of a vertex id. Throws UnknownVertex.
  int index_of(const std::string& name) const;
  bool has_vertex(const std::string& name) const { return index_.count(name) > 0; }

  const Rational& conductance(int u, int v) const { return cond_[u][v]; }
  bool adjacent(int u, int v) const { return cond_[u][v] > 0; }
  const Rational& degree(int x) const { return degree_[x]; }
  const std::vector<int>& neighbors(int x) const { return adj_[x]; }

  bool has_unit_conductances() const;

 private:
  Network() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<Rational>> cond_;
  std::vector<std::vector<int>> adj_;
  std::vector<Rational> degree_;
};

/// Unit-conductance complete bipartite graph K_{a,b}. The side whose degree
/// is largest comes first in insertion order (so eccentricities satisfy
/// D0 <= D1); on a tie the a-side comes first.
Network make_complete_bipartite(int a, int b);

/// Replaces every edge {u,v} of a simple unit-conductance graph by a path
/// u - w_uv - v through a fresh vertex named "u|v". Original vertices keep
/// their ids; the fresh vertices form one stable set.
Network make_subdivision(const Network& g);

struct DistanceTable {
  std::vector<std::vector<int>> d;
  int diameter = 0;

  int operator()(int x, int y) const { return d[x][y]; }
  /// Ball size |{z : d(z,y) <= i}|.
  int ball_size(int y, int i) const;
};

/// All-pairs hop distances by BFS; conductance values do not affect distance.
DistanceTable distances(const Network& net);

/// Combinatorial Laplacian: L(x,x) = k(x), L(x,y) = -c(x,y) for x != y.
RationalMatrix laplacian(const Network& net);

/// Edge-list text format: one `u v p/q` per line, conductance optional
/// (default 1), `#` starts a comment line.
std::vector<Edge> parse_edge_list(std::istream& in);
Network read_network(const std::string& path);

}  // namespace netpot

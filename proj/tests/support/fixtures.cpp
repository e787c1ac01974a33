#include "fixtures.hpp"

#include <random>
#include <set>
#include <string>

namespace netpot::fixtures {

Network triangle(const Rational& c1, const Rational& c2, const Rational& c3) {
  return Network::from_edges({{"x1", "x2", c1}, {"x2", "x3", c2}, {"x3", "x1", c3}});
}

Network path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), 1});
  return Network::from_edges(edges);
}

Network cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i % n + 1), 1});
  return Network::from_edges(edges);
}

Network complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      edges.push_back({"v" + std::to_string(i), "v" + std::to_string(j), 1});
  return Network::from_edges(edges);
}

Network petersen() {
  // Vertices are 2-subsets of {1..5}; edges join disjoint pairs.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
  auto name = [](std::pair<int, int> p) {
    return std::to_string(p.first) + std::to_string(p.second);
  };
  std::vector<Edge> edges;
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (i != k && i != l && j != k && j != l) edges.push_back({name(pairs[a]), name(pairs[b]), 1});
    }
  return Network::from_edges(edges);
}

std::vector<Network> random_networks(int count, int max_order, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Network> out;
  while (static_cast<int>(out.size()) < count) {
    int n = std::uniform_int_distribution<int>(2, max_order)(rng);
    auto vertex = [](int i) { return "v" + std::to_string(i); };
    auto weight = [&rng]() {
      int p = std::uniform_int_distribution<int>(1, 9)(rng);
      int q = std::uniform_int_distribution<int>(1, 9)(rng);
      return Rational(p, q);
    };

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;
    // Random spanning tree first, extra random edges after.
    for (int i = 2; i <= n; ++i) {
      int parent = std::uniform_int_distribution<int>(1, i - 1)(rng);
      used.insert({parent, i});
      edges.push_back({vertex(parent), vertex(i), weight()});
    }
    int extras = std::uniform_int_distribution<int>(0, n)(rng);
    for (int e = 0; e < extras; ++e) {
      int u = std::uniform_int_distribution<int>(1, n)(rng);
      int v = std::uniform_int_distribution<int>(1, n)(rng);
      if (u == v) continue;
      auto key = std::minmax(u, v);
      if (!used.insert({key.first, key.second}).second) continue;
      edges.push_back({vertex(key.first), vertex(key.second), weight()});
    }
    out.push_back(Network::from_edges(edges));
  }
  return out;
}

}  // namespace netpot::fixtures

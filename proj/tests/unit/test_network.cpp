#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "netpot/errors.hpp"
#include "netpot/network.hpp"

using namespace netpot;

TEST_CASE("rational parsing and canonical form") {
  CHECK(to_string(parse_rational("3/4")) == "3/4");
  CHECK(to_string(parse_rational("-6/8")) == "-3/4");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(Rational(10, 2)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("build_network basics") {
  Network k3 = fixtures::triangle(1, 1, 1);
  CHECK(k3.order() == 3);
  for (int x = 0; x < 3; ++x) CHECK(k3.degree(x) == 2);

  Network digon = Network::from_edges({{"a", "b", 1}});
  CHECK(digon.order() == 2);
  CHECK(digon.degree(0) == 1);

  CHECK_THROWS_AS(Network::from_edges({{"a", "b", 1}, {"c", "d", 1}}), DisconnectedGraph);
  CHECK_THROWS_AS(Network::from_edges({{"a", "a", 1}}), InvalidConductance);
  CHECK_THROWS_AS(Network::from_edges({{"a", "b", Rational(-1)}}), InvalidConductance);
  CHECK_THROWS_AS(Network::from_edges({{"a", "b", 1}, {"b", "a", 1}}), DuplicateEdge);
}

TEST_CASE("complete bipartite constructor") {
  Network k23 = make_complete_bipartite(2, 3);
  CHECK(k23.order() == 5);
  int deg3 = 0, deg2 = 0;
  for (int x = 0; x < 5; ++x) {
    if (k23.degree(x) == 3) ++deg3;
    if (k23.degree(x) == 2) ++deg2;
  }
  CHECK(deg3 == 2);
  CHECK(deg2 == 3);
  // Higher-degree side first in insertion order.
  CHECK(k23.degree(0) == 3);

  Network star = make_complete_bipartite(1, 4);
  CHECK(star.order() == 5);
  CHECK(star.degree(0) == 4);  // the hub comes first

  Network k33 = make_complete_bipartite(3, 3);
  for (int x = 0; x < 6; ++x) CHECK(k33.degree(x) == 3);
}

TEST_CASE("subdivision of K4 and K2") {
  Network sk4 = make_subdivision(fixtures::complete(4));
  CHECK(sk4.order() == 10);
  int deg3 = 0, deg2 = 0;
  for (int x = 0; x < 10; ++x) {
    if (sk4.degree(x) == 3) ++deg3;
    if (sk4.degree(x) == 2) ++deg2;
  }
  CHECK(deg3 == 4);
  CHECK(deg2 == 6);
  // Every edge joins an original vertex to a fresh vertex.
  for (int u = 0; u < sk4.order(); ++u)
    for (int v : sk4.neighbors(u)) {
      bool u_fresh = sk4.vertex_name(u).find('|') != std::string::npos;
      bool v_fresh = sk4.vertex_name(v).find('|') != std::string::npos;
      CHECK(u_fresh != v_fresh);
    }

  Network p3 = make_subdivision(Network::from_edges({{"a", "b", 1}}));
  CHECK(p3.order() == 3);

  CHECK(make_subdivision(fixtures::petersen()).order() == 25);
}

TEST_CASE("distances") {
  Network k3 = fixtures::triangle(1, 1, 1);
  DistanceTable d3 = distances(k3);
  CHECK(d3.diameter == 1);
  CHECK(d3(0, 1) == 1);
  CHECK(d3(0, 0) == 0);

  Network sk4 = make_subdivision(fixtures::complete(4));
  DistanceTable dsk = distances(sk4);
  CHECK(dsk(sk4.index_of("v1"), sk4.index_of("v2")) == 2);

  Network k23 = make_complete_bipartite(2, 3);
  DistanceTable dk = distances(k23);
  CHECK(dk.diameter == 2);
  CHECK(dk(k23.index_of("b1"), k23.index_of("b2")) == 2);

  // Distance ignores conductance values.
  Network weighted = fixtures::triangle(Rational(1, 7), 5, Rational(9, 2));
  CHECK(distances(weighted).diameter == 1);
}

TEST_CASE("laplacian") {
  Network digon = Network::from_edges({{"a", "b", 1}});
  RationalMatrix l2 = laplacian(digon);
  CHECK(l2(0, 0) == 1);
  CHECK(l2(0, 1) == -1);

  Rational c1 = 2, c2 = 3, c3 = Rational(1, 2);
  Network k3 = fixtures::triangle(c1, c2, c3);
  RationalMatrix l3 = laplacian(k3);
  CHECK(l3(0, 0) == c1 + c3);
  CHECK(l3(1, 1) == c1 + c2);
  CHECK(l3(2, 2) == c2 + c3);
  CHECK(l3.is_symmetric());
  for (int i = 0; i < 3; ++i) CHECK(l3.row_sum(i) == 0);

  // d(x,y) = 1 iff L(x,y) < 0, on a mixed fixture.
  Network sk4 = make_subdivision(fixtures::complete(4));
  RationalMatrix l = laplacian(sk4);
  DistanceTable d = distances(sk4);
  for (int x = 0; x < sk4.order(); ++x)
    for (int y = 0; y < sk4.order(); ++y)
      if (x != y) CHECK((d(x, y) == 1) == (l(x, y) < 0));
}

TEST_CASE("edge list parsing") {
  std::istringstream in(
      "# comment line\n"
      "a b 1/2\n"
      "b c\n"
      "\n"
      "c a 3\n");
  auto edges = parse_edge_list(in);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0].conductance == Rational(1, 2));
  CHECK(edges[1].conductance == 1);
  CHECK(edges[2].conductance == 3);

  std::istringstream bad("a\n");
  CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
  std::istringstream trailing("a b 1 junk\n");
  CHECK_THROWS_AS(parse_edge_list(trailing), ParseError);
}

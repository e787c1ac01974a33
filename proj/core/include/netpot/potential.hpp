#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netpot/network.hpp"

namespace netpot {

/// The unique nu with nu(y) = 0, nu > 0 elsewhere and L(nu) = 1 - n*e_y.
struct EquilibriumMeasure {
  int base_vertex = 0;
  std::vector<Rational> values;  // indexed by dense vertex index
  Rational capacity;             // sum of all values
};

/// Sorted distinct values of an equilibrium measure with multiplicities.
/// levels[0] = 0 with multiplicity 1; length = number of nonzero levels.
struct EquilibriumArray {
  int base_vertex = 0;
  std::vector<Rational> levels;
  std::vector<int> multiplicities;
  int length = 0;
};

struct MWitness {
  std::string x;
  std::string y;
  std::string detail;
};

/// Verdict of an M-property test. verdict == false implies witness present.
struct MReport {
  bool verdict = false;
  std::optional<MWitness> witness;
  std::string method;
};

/// Exact solution of L(nu) = 1 - n*e_y with nu(y) = 0, by Gaussian
/// elimination on the Laplacian with row/column y deleted.
EquilibriumMeasure solve_equilibrium(const Network& net, int y);

/// Collapses a measure to its equilibrium array and checks the depth
/// property (value index bounds distance). A DepthViolation signals a
/// solver bug and must be unreachable.
EquilibriumArray equilibrium_array(const EquilibriumMeasure& m, const DistanceTable& dist);

/// Group inverse of the Laplacian assembled from n equilibrium solves via
/// L#(x,y) = (cap(y) - n*nu^y(x)) / n^2. The group-inverse identities and
/// symmetry are verified exactly; a violation aborts with FormMismatch.
RationalMatrix group_inverse(const Network& net);

/// R(x,y) = (nu^x(y) + nu^y(x)) / n. Throws SameVertex when x == y.
Rational effective_resistance(const Network& net, int x, int y);

/// M-property of L#, decided two ways: cap(y) <= n*nu^y(x) on every edge,
/// and sign of every off-diagonal entry of the group inverse. The two
/// verdicts must agree.
MReport m_property_general(const Network& net);

/// The array-level sufficient criterion
/// sum_{i>=2} m_i(y) (q_i(y) - q_1(y)) <= q_1(y) for every y.
MReport sufficient_m_test(std::span<const EquilibriumArray> arrays);

}  // namespace netpot

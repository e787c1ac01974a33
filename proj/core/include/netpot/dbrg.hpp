#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netpot/potential.hpp"

namespace netpot {

/// Double intersection array { k_l; c_{l,1}, ..., c_{l,D_l} }, l = 0,1.
/// Only the c-sequences are stored; the b-numbers are derived from the
/// parity rule c_{l,i} + b_{l,i} = k_l (i even) / k_{1-l} (i odd).
struct BiregularArray {
  int D0 = 0, D1 = 0;
  long long k0 = 0, k1 = 0;
  std::vector<long long> c0;  // c0[i-1] = c_{0,i}, i = 1..D0
  std::vector<long long> c1;

  int D(int side) const { return side == 0 ? D0 : D1; }
  long long k(int side) const { return side == 0 ? k0 : k1; }
  /// c_{side,i}, with c_{side,0} = 0.
  long long c(int side, int i) const;
  /// b_{side,i} via the parity rule; b_{side,0} = k_side.
  long long b(int side, int i) const;

  bool operator==(const BiregularArray&) const = default;
};

/// Sphere sizes k_{l,i}, ball sizes B_{l,i} and the common vertex count n.
struct DerivedCounts {
  std::array<std::vector<Integer>, 2> k;  // k[l][i], i = 0..D_l
  std::array<std::vector<Integer>, 2> B;
  Integer n;
};

/// k_{l,i} = prod_{j<i} b_{l,j}/c_{l,j+1}; throws NegativeB on a
/// parity-inconsistent array, NonIntegralCount when a sphere size is not an
/// integer, TotalMismatch when B_{0,D0} != B_{1,D1}.
DerivedCounts derive_counts(const BiregularArray& a);

struct FeasibilityReport {
  bool passed = true;
  // (condition id, human-readable detail); ids are among
  // parity, integrality, ball-sum, L3.1.i .. L3.1.viii, L3.3-ratios.
  std::vector<std::pair<std::string, std::string>> failures;
};

/// Evaluates every checkable feasibility condition; failures are reported,
/// never thrown.
FeasibilityReport validate(const BiregularArray& a);

/// Closed-form equilibrium arrays q_{l,0..D_l}, strictly increasing with
/// q_{l,0} = 0. Computed from both the b-form and the c-form; a mismatch or
/// a monotonicity failure throws FormMismatch.
struct DbrgEquilibrium {
  std::array<std::vector<Rational>, 2> q;
};

DbrgEquilibrium equilibrium_arrays(const BiregularArray& a);

/// q_{l,m} = q_{1-l,m} + (n-1)(1/k_l - 1/k_{1-l}) on every shared odd
/// distance (the relation couples base vertices on opposite sides).
bool cross_relation_check(const DbrgEquilibrium& e, const BiregularArray& a);

/// cap(y) = sum_j (n - B_{l,j-1})^2 / (k_{l,j} c_{l,j}) for y on the given side.
Rational dbrg_capacity(const BiregularArray& a, int side);

/// L#(x,y) for y on `side` and d(x,y) = j, via the closed form; the
/// equivalent b-form is evaluated too and must agree exactly.
Rational group_inverse_entry(const BiregularArray& a, int side, int j);

/// R(x,y) = (2/n) q_{l,dist} + ((n-1)/n)(1/k_{l'} - 1/k_l), where l is the
/// side of y and l' the side of x implied by the parity of dist.
Rational dbrg_effective_resistance(const BiregularArray& a, int side_of_y, int dist);

/// Verdict of
/// sum_{j=1}^{D0-1} (n - B_{0,j})^2 / (k_{0,j} b_{0,j}) <= (n-1)/k_0,
/// evaluated on both sides; the two verdicts must agree.
MReport m_property_array(const BiregularArray& a);

/// Necessary condition for the M-property when D0 >= 2: n < 2*k1 + k0.
bool necessary_condition(const BiregularArray& a);

/// Inverts the closed-form equilibrium arrays back to an intersection array
/// from the q-values and sphere multiplicities. Throws NonIntegralRecovery
/// when a recovered intersection number is not a positive integer.
BiregularArray recover_array(const DbrgEquilibrium& e,
                             const std::array<std::vector<long long>, 2>& multiplicities);

/// Bipartition of a connected bipartite graph: side[x] in {0,1}, with side 0
/// chosen by (eccentricity, -degree, lexicographically smallest vertex id).
/// Empty optional when the graph is not bipartite.
std::optional<std::vector<int>> stable_sets(const Network& net);

/// Tests whether a concrete unit-conductance network is distance-biregular
/// and returns its double intersection array (sides labeled so D0 <= D1,
/// ties broken toward k0 >= k1). Empty optional means "not distance-biregular".
std::optional<BiregularArray> detect_dbrg(const Network& net);

}  // namespace netpot

#pragma once

#include <string>
#include <vector>

#include "netpot/dbrg.hpp"

namespace netpot {

/// Diameter-bounded classification of M-property candidates. OutOfBounds
/// means D0 > 3 or D1 > 4, where the M-property is impossible.
enum class CaseLabel {
  Digon,
  Star,
  CompleteBipartite,
  BipartiteDRG_D3,
  QSD_D3D4,
  OutOfBounds,
};

std::string to_string(CaseLabel label);

CaseLabel classify_case(const BiregularArray& a);

/// Quasi-symmetric 2-design parameters with smaller intersection number 0.
struct QsdParams {
  long long r = 0;       // replication number
  long long k = 0;       // block size
  long long lambda = 0;  // pair count
  long long y = 0;       // nonzero block intersection number
};

/// Checks r > lambda, (y-1)(r-1) = (k-1)(lambda-1), y | k*lambda and
/// 0 < y < k; throws InconsistentParams naming the violated invariant.
void check_qsd_params(const QsdParams& p);

/// M-property criterion for the D0=3, D1=4 incidence graphs:
/// (k-1)(r-lambda)((k+r)^2 - lambda*k) <= k^2 lambda^2.
bool qsd_m_condition(const QsdParams& p);

/// Double array { r; 1, lambda, k | k; 1, y, k*lambda/y, k }.
BiregularArray build_case5_array(const QsdParams& p);

/// M-property criterion for bipartite distance-regular graphs with D = 3
/// and array {k, k-1, k-mu; 1, mu, k}: 4k/5 <= mu <= k-1.
bool bipartite_drg_d3_m(long long k, long long mu);

struct SearchBounds {
  long long max_k = 5;
  int max_D = 8;
  long long max_n = 60;
};

struct SearchHit {
  BiregularArray array;
  Integer n;
  MReport m_property;
  CaseLabel label = CaseLabel::OutOfBounds;
  // Realizability observations that are reported but never pruned on, e.g.
  // a non-antipodal D=3 bipartite array whose k - mu is not a square.
  std::vector<std::string> notes;
};

/// Exhaustively enumerates parity-consistent double intersection arrays
/// within the bounds (canonical labeling D0 <= D1, k0 >= k1), keeps those
/// passing validate, and evaluates the M-property and case label for each.
/// Output is sorted by (n, k0, k1, D0, D1, c0, c1).
std::vector<SearchHit> search_arrays(const SearchBounds& bounds);

}  // namespace netpot

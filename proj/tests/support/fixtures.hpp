#pragma once

#include <vector>

#include "netpot/network.hpp"

namespace netpot::fixtures {

/// K_3 with conductances c1 = c(x1,x2), c2 = c(x2,x3), c3 = c(x3,x1).
Network triangle(const Rational& c1, const Rational& c2, const Rational& c3);

/// Path v1 - v2 - ... - vn with unit conductances.
Network path(int n);

/// Even cycle C_n with unit conductances.
Network cycle(int n);

/// Complete graph K_n with unit conductances.
Network complete(int n);

/// The Petersen graph (Kneser graph on 2-subsets of a 5-set).
Network petersen();

/// Deterministic random connected networks with rational conductances,
/// 2 <= n <= max_order. Same seed, same networks.
std::vector<Network> random_networks(int count, int max_order, unsigned seed);

}  // namespace netpot::fixtures

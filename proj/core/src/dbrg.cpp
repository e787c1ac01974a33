#include "netpot/dbrg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "netpot/errors.hpp"

namespace netpot {

long long BiregularArray::c(int side, int i) const {
  if (i == 0) return 0;
  return side == 0 ? c0[i - 1] : c1[i - 1];
}

long long BiregularArray::b(int side, int i) const {
  long long valency = (i % 2 == 0) ? k(side) : k(1 - side);
  return valency - c(side, i);
}

namespace {

// Parity consistency: c_{l,1} = 1, 1 <= c_{l,i} <= valency(i), b_{l,i} > 0
// for i < D_l and b_{l,D_l} = 0.
std::optional<std::string> parity_failure(const BiregularArray& a) {
  if (a.D0 < 1 || a.D1 < 1 || a.k0 < 1 || a.k1 < 1) return "degrees and diameters must be >= 1";
  if (static_cast<int>(a.c0.size()) != a.D0 || static_cast<int>(a.c1.size()) != a.D1)
    return "c-sequence length must equal the diameter";
  for (int side = 0; side < 2; ++side) {
    if (a.c(side, 1) != 1) return "c_{" + std::to_string(side) + ",1} != 1";
    for (int i = 1; i <= a.D(side); ++i) {
      if (a.c(side, i) < 1)
        return "c_{" + std::to_string(side) + "," + std::to_string(i) + "} < 1";
      long long b = a.b(side, i);
      if (b < 0 || (b == 0 && i < a.D(side)))
        return "b_{" + std::to_string(side) + "," + std::to_string(i) + "} = " +
               std::to_string(b);
      if (b != 0 && i == a.D(side))
        return "b_{" + std::to_string(side) + ",D} = " + std::to_string(b) + " != 0";
    }
  }
  return std::nullopt;
}

Integer binomial(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  Integer out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

DerivedCounts derive_counts(const BiregularArray& a) {
  if (auto failure = parity_failure(a)) throw NegativeB(*failure);

  DerivedCounts out;
  for (int side = 0; side < 2; ++side) {
    Rational k = 1;
    out.k[side].push_back(1);
    out.B[side].push_back(1);
    for (int i = 1; i <= a.D(side); ++i) {
      k = k * a.b(side, i - 1) / a.c(side, i);
      if (!is_integer(k))
        throw NonIntegralCount("k_{" + std::to_string(side) + "," + std::to_string(i) +
                               "} = " + to_string(k));
      out.k[side].push_back(to_integer(k));
      out.B[side].push_back(out.B[side].back() + out.k[side].back());
    }
  }
  if (out.B[0].back() != out.B[1].back())
    throw TotalMismatch("B_{0,D0} = " + out.B[0].back().str() + " but B_{1,D1} = " +
                        out.B[1].back().str());
  out.n = out.B[0].back();
  return out;
}

FeasibilityReport validate(const BiregularArray& a) {
  FeasibilityReport report;
  auto fail = [&report](const std::string& id, const std::string& detail) {
    report.passed = false;
    report.failures.emplace_back(id, detail);
  };

  // (i) diameter relation is checkable before anything else.
  if (a.D1 - a.D0 < 0 || a.D1 - a.D0 > 1)
    fail("L3.1.i", "D1 - D0 = " + std::to_string(a.D1 - a.D0) + " outside {0,1}");
  else if (a.D1 == a.D0 + 1 && a.D0 % 2 == 0)
    fail("L3.1.i", "D1 = D0 + 1 with D0 = " + std::to_string(a.D0) + " even");

  if (auto failure = parity_failure(a)) {
    fail("parity", *failure);
    return report;
  }

  DerivedCounts counts;
  try {
    counts = derive_counts(a);
  } catch (const NonIntegralCount& e) {
    fail("integrality", e.what());
    return report;
  } catch (const TotalMismatch& e) {
    fail("ball-sum", e.what());
    return report;
  }
  const Integer& n = counts.n;

  // (ii) count identity k_{l,i} b_{l,i} = k_{l,i+1} c_{l,i+1} (the product
  // form already produced integers; recheck the recurrence as stated).
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < a.D(side); ++i)
      if (counts.k[side][i] * a.b(side, i) != counts.k[side][i + 1] * a.c(side, i + 1))
        fail("L3.1.ii", "count identity fails at (" + std::to_string(side) + "," +
                            std::to_string(i) + ")");

  // (iii) k0 k_{1,2i+1} = k1 k_{0,2i+1}
  for (int i = 0; 2 * i + 1 <= a.D0; ++i)
    if (a.k0 * counts.k[1][2 * i + 1] != a.k1 * counts.k[0][2 * i + 1])
      fail("L3.1.iii", "k0*k_{1," + std::to_string(2 * i + 1) + "} != k1*k_{0," +
                           std::to_string(2 * i + 1) + "}");

  // (iv) c_{0,2i}c_{0,2i+1} = c_{1,2i}c_{1,2i+1}, b_{0,2i-1}b_{0,2i} = b_{1,2i-1}b_{1,2i}
  for (int i = 1; 2 * i + 1 <= a.D0; ++i)
    if (a.c(0, 2 * i) * a.c(0, 2 * i + 1) != a.c(1, 2 * i) * a.c(1, 2 * i + 1))
      fail("L3.1.iv", "c-product identity fails at i = " + std::to_string(i));
  for (int i = 1; 2 * i <= a.D0; ++i)
    if (a.b(0, 2 * i - 1) * a.b(0, 2 * i) != a.b(1, 2 * i - 1) * a.b(1, 2 * i))
      fail("L3.1.iv", "b-product identity fails at i = " + std::to_string(i));

  // (v) monotonicity chains.
  for (int side = 0; side < 2; ++side) {
    int other = 1 - side;
    for (int i = 0; i <= a.D(other) - 1; ++i) {
      if (i <= a.D(side)) {
        if (a.c(side, i) > a.c(other, i + 1))
          fail("L3.1.v", "c_{" + std::to_string(side) + "," + std::to_string(i) +
                             "} > c_{" + std::to_string(other) + "," + std::to_string(i + 1) + "}");
        if (a.b(side, i) < a.b(other, i + 1))
          fail("L3.1.v", "b_{" + std::to_string(side) + "," + std::to_string(i) +
                             "} < b_{" + std::to_string(other) + "," + std::to_string(i + 1) + "}");
      }
    }
    for (int i = 1; i <= a.D(other) - 2; ++i)
      if (i <= a.D(side) && a.b(side, i) < a.c(other, i + 1))
        fail("L3.1.v", "b_{" + std::to_string(side) + "," + std::to_string(i) + "} < c_{" +
                           std::to_string(other) + "," + std::to_string(i + 1) + "}");
  }

  // (vi) c_{l,2} <= binom(c_{l,3}-1, c_{lbar,2}-1), defined when D_l >= 3.
  for (int side = 0; side < 2; ++side)
    if (a.D(side) >= 3 && a.D(1 - side) >= 2 &&
        a.c(side, 2) > binomial(a.c(side, 3) - 1, a.c(1 - side, 2) - 1))
      fail("L3.1.vi", "c_{" + std::to_string(side) + ",2} exceeds the binomial bound");

  // (vii) i+j even, i+j <= D_l  =>  c_{l,i} <= b_{l,j}.
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i <= a.D(side); ++i)
      for (int j = 0; i + j <= a.D(side); ++j)
        if ((i + j) % 2 == 0 && a.c(side, i) > a.b(side, j))
          fail("L3.1.vii", "c_{" + std::to_string(side) + "," + std::to_string(i) + "} > b_{" +
                               std::to_string(side) + "," + std::to_string(j) + "}");

  // (viii) i+j odd, i+j <= D0  =>  c_{l,i} <= b_{lbar,j} and c_{lbar,i} <= b_{l,j}.
  for (int i = 0; i <= a.D0; ++i)
    for (int j = 0; i + j <= a.D0; ++j) {
      if ((i + j) % 2 == 0) continue;
      if (a.c(0, i) > a.b(1, j))
        fail("L3.1.viii",
             "c_{0," + std::to_string(i) + "} > b_{1," + std::to_string(j) + "}");
      if (a.c(1, i) > a.b(0, j))
        fail("L3.1.viii",
             "c_{1," + std::to_string(i) + "} > b_{0," + std::to_string(j) + "}");
    }

  // Ratio lemma (strict) when k0 > k1, on indices where both sides carry
  // positive b-numbers, i.e. 1 <= i <= D0 - 1.
  if (a.k0 > a.k1) {
    for (int i = 1; i <= a.D0 - 1; ++i) {
      long long b_num = (i % 2 == 0) ? a.b(1, i) : a.b(0, i);
      long long b_den = (i % 2 == 0) ? a.b(0, i) : a.b(1, i);
      long long c_num = (i % 2 == 0) ? a.c(1, i) : a.c(0, i);
      long long c_den = (i % 2 == 0) ? a.c(0, i) : a.c(1, i);
      if (!(Rational(b_num, b_den) < Rational(a.k1, a.k0)))
        fail("L3.3-ratios", "b-ratio not below k1/k0 at i = " + std::to_string(i));
      if (!(Rational(a.k1, a.k0) < Rational(c_num, c_den)))
        fail("L3.3-ratios", "c-ratio not above k1/k0 at i = " + std::to_string(i));
    }
  }

  return report;
}

DbrgEquilibrium equilibrium_arrays(const BiregularArray& a) {
  DerivedCounts counts = derive_counts(a);
  const Integer& n = counts.n;

  DbrgEquilibrium out;
  for (int side = 0; side < 2; ++side) {
    std::vector<Rational> b_form{Rational(0)}, c_form{Rational(0)};
    for (int m = 1; m <= a.D(side); ++m) {
      b_form.push_back(b_form.back() +
                       Rational(n - counts.B[side][m - 1],
                                counts.k[side][m - 1] * a.b(side, m - 1)));
      c_form.push_back(c_form.back() +
                       Rational(n - counts.B[side][m - 1], counts.k[side][m] * a.c(side, m)));
    }
    if (b_form != c_form)
      throw FormMismatch("b-form and c-form of q differ on side " + std::to_string(side));
    for (int m = 1; m <= a.D(side); ++m)
      if (b_form[m] <= b_form[m - 1])
        throw FormMismatch("q not strictly increasing on side " + std::to_string(side));
    out.q[side] = std::move(b_form);
  }
  return out;
}

bool cross_relation_check(const DbrgEquilibrium& e, const BiregularArray& a) {
  DerivedCounts counts = derive_counts(a);
  Rational shift = Rational(counts.n - 1) * (Rational(1, a.k0) - Rational(1, a.k1));
  int shared = std::min(a.D0, a.D1);
  // The relation compares measures based at opposite sides, so only odd
  // distances are informative; at even distances it degenerates to q = q.
  for (int m = 1; m <= shared; m += 2)
    if (e.q[0][m] != e.q[1][m] + shift) return false;
  return true;
}

Rational dbrg_capacity(const BiregularArray& a, int side) {
  DerivedCounts counts = derive_counts(a);
  Rational cap = 0;
  for (int j = 1; j <= a.D(side); ++j) {
    Integer tail = counts.n - counts.B[side][j - 1];
    cap += Rational(tail * tail, counts.k[side][j] * a.c(side, j));
  }
  return cap;
}

Rational group_inverse_entry(const BiregularArray& a, int side, int j) {
  if (j < 0 || j > a.D(side))
    throw DistanceOutOfRange("distance " + std::to_string(j) + " outside 0.." +
                             std::to_string(a.D(side)));
  DerivedCounts counts = derive_counts(a);
  const Integer& n = counts.n;

  Rational c_form = 0;
  for (int t = j + 1; t <= a.D(side); ++t)
    c_form += Rational(n - counts.B[side][t - 1], counts.k[side][t] * a.c(side, t));
  c_form /= n;
  for (int t = 1; t <= a.D(side); ++t)
    c_form -= Rational(counts.B[side][t - 1] * (n - counts.B[side][t - 1]),
                       counts.k[side][t] * a.c(side, t)) /
              (Rational(n) * n);

  Rational b_form = 0;
  for (int t = j; t <= a.D(side) - 1; ++t)
    b_form += Rational(n - counts.B[side][t], counts.k[side][t] * a.b(side, t));
  b_form /= n;
  for (int t = 0; t <= a.D(side) - 1; ++t)
    b_form -= Rational(counts.B[side][t] * (n - counts.B[side][t]),
                       counts.k[side][t] * a.b(side, t)) /
              (Rational(n) * n);

  if (b_form != c_form)
    throw FormMismatch("b-form and c-form of L# differ at (" + std::to_string(side) + "," +
                       std::to_string(j) + ")");
  return c_form;
}

Rational dbrg_effective_resistance(const BiregularArray& a, int side_of_y, int dist) {
  if (dist < 1 || dist > a.D(side_of_y))
    throw DistanceOutOfRange("distance " + std::to_string(dist) + " outside 1.." +
                             std::to_string(a.D(side_of_y)));
  DbrgEquilibrium e = equilibrium_arrays(a);
  DerivedCounts counts = derive_counts(a);
  int side_of_x = (dist % 2 == 0) ? side_of_y : 1 - side_of_y;
  Rational correction =
      Rational(counts.n - 1) *
      (Rational(1, a.k(side_of_x)) - Rational(1, a.k(side_of_y)));
  return (2 * e.q[side_of_y][dist] + correction) / counts.n;
}

MReport m_property_array(const BiregularArray& a) {
  DerivedCounts counts = derive_counts(a);
  const Integer& n = counts.n;

  std::array<bool, 2> verdict{};
  std::array<Rational, 2> lhs{}, rhs{};
  for (int side = 0; side < 2; ++side) {
    for (int j = 1; j <= a.D(side) - 1; ++j) {
      Integer tail = n - counts.B[side][j];  // sum_{i > j} k_{side,i}
      lhs[side] += Rational(tail * tail, counts.k[side][j] * a.b(side, j));
    }
    rhs[side] = Rational(n - 1, a.k(side));
    verdict[side] = lhs[side] <= rhs[side];
  }
  if (verdict[0] != verdict[1])
    throw FormMismatch("side-0 and side-1 M-property criteria disagree");

  MReport report{verdict[0], std::nullopt, "dbrg-array"};
  if (!report.verdict)
    report.witness = MWitness{"", "",
                              "sum (n-B_{0,j})^2/(k_{0,j} b_{0,j}) = " + to_string(lhs[0]) +
                                  " > (n-1)/k0 = " + to_string(rhs[0])};
  return report;
}

bool necessary_condition(const BiregularArray& a) {
  if (a.D0 < 2) throw DiameterTooSmall("condition needs D0 >= 2");
  DerivedCounts counts = derive_counts(a);
  return counts.n < 2 * a.k1 + a.k0;
}

BiregularArray recover_array(const DbrgEquilibrium& e,
                             const std::array<std::vector<long long>, 2>& multiplicities) {
  BiregularArray out;
  std::array<std::vector<long long>, 2> recovered_b;
  for (int side = 0; side < 2; ++side) {
    const auto& q = e.q[side];
    const auto& m = multiplicities[side];
    if (q.size() != m.size() || q.size() < 2)
      throw InconsistentParams("q and multiplicities must have equal length >= 2");
    const int D = static_cast<int>(q.size()) - 1;
    for (int i = 1; i <= D; ++i)
      if (q[i] <= q[i - 1]) throw InconsistentParams("q must be strictly increasing");
    for (long long mult : m)
      if (mult <= 0) throw InconsistentParams("multiplicities must be positive");

    std::vector<long long> c;
    std::vector<long long> b;
    long long tail = std::accumulate(m.begin() + 1, m.end(), 0LL);
    for (int i = 0; i < D; ++i) {
      Rational gap = q[i + 1] - q[i];
      Rational b_i = Rational(tail) / (m[i] * gap);
      Rational c_next = Rational(tail) / (m[i + 1] * gap);
      if (!is_integer(b_i) || !is_integer(c_next))
        throw NonIntegralRecovery("b_{" + std::to_string(side) + "," + std::to_string(i) +
                                  "} = " + to_string(b_i) + ", c_{" + std::to_string(side) +
                                  "," + std::to_string(i + 1) + "} = " + to_string(c_next));
      b.push_back(static_cast<long long>(to_integer(b_i)));
      c.push_back(static_cast<long long>(to_integer(c_next)));
      tail -= m[i + 1];
    }

    if (side == 0) {
      out.D0 = D;
      out.k0 = b[0];
      out.c0 = c;
    } else {
      out.D1 = D;
      out.k1 = b[0];
      out.c1 = c;
    }
    recovered_b[side] = std::move(b);
  }

  // The returned array derives b-numbers from the parity rule; they must
  // reproduce the recovered ones.
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < out.D(side); ++i)
      if (out.b(side, i) != recovered_b[side][i])
        throw NonIntegralRecovery("recovered b_{" + std::to_string(side) + "," +
                                  std::to_string(i) + "} violates the parity rule");
  return out;
}

std::optional<std::vector<int>> stable_sets(const Network& net) {
  const int n = net.order();
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : net.neighbors(u)) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;  // odd cycle
      }
    }
  }
  return color;
}

std::optional<BiregularArray> detect_dbrg(const Network& net) {
  if (!net.has_unit_conductances()) return std::nullopt;
  auto color = stable_sets(net);
  if (!color) return std::nullopt;

  const int n = net.order();
  DistanceTable dist = distances(net);

  // Semiregularity and per-class eccentricity.
  std::array<long long, 2> valency{-1, -1};
  std::array<int, 2> ecc{0, 0};
  for (int x = 0; x < n; ++x) {
    int side = (*color)[x];
    long long deg = static_cast<long long>(net.neighbors(x).size());
    if (valency[side] < 0) valency[side] = deg;
    if (valency[side] != deg) return std::nullopt;
    for (int y = 0; y < n; ++y) ecc[side] = std::max(ecc[side], dist(x, y));
  }
  if (valency[0] < 0 || valency[1] < 0) return std::nullopt;  // one empty class

  // Intersection numbers must depend only on (side of x, d(x,y)).
  std::array<std::vector<long long>, 2> c_num, b_num;
  for (int side = 0; side < 2; ++side) {
    c_num[side].assign(ecc[side] + 1, -1);
    b_num[side].assign(ecc[side] + 1, -1);
  }
  for (int x = 0; x < n; ++x) {
    int side = (*color)[x];
    for (int y = 0; y < n; ++y) {
      int i = dist(x, y);
      if (i == 0) continue;
      long long closer = 0, farther = 0;
      for (int z : net.neighbors(y)) {
        if (dist(x, z) == i - 1) ++closer;
        if (dist(x, z) == i + 1) ++farther;
      }
      if (c_num[side][i] < 0) {
        c_num[side][i] = closer;
        b_num[side][i] = farther;
      } else if (c_num[side][i] != closer || b_num[side][i] != farther) {
        return std::nullopt;
      }
    }
  }

  // Label sides so D0 <= D1, ties broken toward k0 >= k1, then toward the
  // class containing the lexicographically smallest vertex id.
  int v0 = 0;
  if (ecc[0] != ecc[1]) {
    v0 = ecc[0] < ecc[1] ? 0 : 1;
  } else if (valency[0] != valency[1]) {
    v0 = valency[0] > valency[1] ? 0 : 1;
  } else {
    std::string smallest = *std::min_element(net.vertex_names().begin(), net.vertex_names().end());
    v0 = (*color)[net.index_of(smallest)];
  }

  BiregularArray a;
  a.D0 = ecc[v0];
  a.D1 = ecc[1 - v0];
  a.k0 = valency[v0];
  a.k1 = valency[1 - v0];
  a.c0.assign(c_num[v0].begin() + 1, c_num[v0].end());
  a.c1.assign(c_num[1 - v0].begin() + 1, c_num[1 - v0].end());

  // Observed b-numbers must match the parity rule exactly.
  for (int side = 0; side < 2; ++side) {
    const auto& observed = side == 0 ? b_num[v0] : b_num[1 - v0];
    for (int i = 1; i <= a.D(side); ++i)
      if (a.b(side, i) != observed[i]) return std::nullopt;
  }
  if (parity_failure(a)) return std::nullopt;
  return a;
}

}  // namespace netpot

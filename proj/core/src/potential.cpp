#include "netpot/potential.hpp"

#include <algorithm>
#include <map>

#include "netpot/errors.hpp"

namespace netpot {

namespace {

// Exact Gaussian elimination, first-nonzero pivot in column order.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> rhs) {
  const int m = static_cast<int>(rhs.size());
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int row = col; row < m; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw SingularSystem("no pivot in column " + std::to_string(col));
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = col + 1; row < m; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      a[row][col] = 0;
      for (int j = col + 1; j < m; ++j) a[row][j] -= f * a[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(m);
  for (int row = m - 1; row >= 0; --row) {
    Rational acc = rhs[row];
    for (int j = row + 1; j < m; ++j) acc -= a[row][j] * x[j];
    x[row] = acc / a[row][row];
  }
  return x;
}

}  // namespace

EquilibriumMeasure solve_equilibrium(const Network& net, int y) {
  const int n = net.order();
  // Ground at y: delete row/column y of L, right-hand side 1 everywhere else.
  std::vector<int> keep;
  for (int x = 0; x < n; ++x)
    if (x != y) keep.push_back(x);

  const int m = n - 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < m; ++i) {
    a[i][i] = net.degree(keep[i]);
    for (int j = 0; j < m; ++j)
      if (i != j) a[i][j] = -net.conductance(keep[i], keep[j]);
  }
  std::vector<Rational> x = solve_dense(std::move(a), std::vector<Rational>(m, Rational(1)));

  EquilibriumMeasure out;
  out.base_vertex = y;
  out.values.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) out.values[keep[i]] = x[i];

  // The solution of the grounded system is the equilibrium measure; check
  // the defining identity L(nu) = 1 - n*e_y and positivity exactly.
  for (int v = 0; v < n; ++v) {
    Rational lv = net.degree(v) * out.values[v];
    for (int w : net.neighbors(v)) lv -= net.conductance(v, w) * out.values[w];
    Rational expected = (v == y) ? Rational(1 - n) : Rational(1);
    if (lv != expected) throw SingularSystem("equilibrium identity violated");
    if (v != y && out.values[v] <= 0) throw SingularSystem("equilibrium measure not positive");
  }
  for (const Rational& v : out.values) out.capacity += v;
  return out;
}

EquilibriumArray equilibrium_array(const EquilibriumMeasure& m, const DistanceTable& dist) {
  std::map<Rational, int> counts;
  for (const Rational& v : m.values) ++counts[v];

  EquilibriumArray out;
  out.base_vertex = m.base_vertex;
  for (const auto& [value, mult] : counts) {
    out.levels.push_back(value);
    out.multiplicities.push_back(mult);
  }
  out.length = static_cast<int>(out.levels.size()) - 1;

  const int n = static_cast<int>(m.values.size());
  const int y = m.base_vertex;
  // Depth property: nu^y(x) = q_i implies d(x,y) <= i, hence the partial
  // multiplicity sums are bounded by ball sizes.
  for (int x = 0; x < n; ++x) {
    int level = static_cast<int>(
        std::distance(out.levels.begin(),
                      std::find(out.levels.begin(), out.levels.end(), m.values[x])));
    if (dist(x, y) > level)
      throw DepthViolation("vertex at distance " + std::to_string(dist(x, y)) +
                           " carries level " + std::to_string(level));
  }
  int running = 0;
  for (int i = 0; i <= out.length; ++i) {
    running += out.multiplicities[i];
    if (i <= dist.diameter && running > dist.ball_size(y, i))
      throw DepthViolation("partial multiplicities exceed ball size at level " +
                           std::to_string(i));
  }
  return out;
}

RationalMatrix group_inverse(const Network& net) {
  const int n = net.order();
  RationalMatrix g(n);
  for (int y = 0; y < n; ++y) {
    EquilibriumMeasure m = solve_equilibrium(net, y);
    for (int x = 0; x < n; ++x)
      g(x, y) = (m.capacity - n * m.values[x]) / (Rational(n) * n);
  }

  if (!g.is_symmetric()) throw FormMismatch("group inverse not symmetric");
  for (int i = 0; i < n; ++i)
    if (g.row_sum(i) != 0) throw FormMismatch("group inverse row sum nonzero");
  RationalMatrix l = laplacian(net);
  if (l * g * l != l) throw FormMismatch("L L# L != L");
  if (g * l * g != g) throw FormMismatch("L# L L# != L#");
  return g;
}

Rational effective_resistance(const Network& net, int x, int y) {
  if (x == y) throw SameVertex("effective resistance needs two distinct vertices");
  EquilibriumMeasure mx = solve_equilibrium(net, x);
  EquilibriumMeasure my = solve_equilibrium(net, y);
  return (mx.values[y] + my.values[x]) / net.order();
}

MReport m_property_general(const Network& net) {
  const int n = net.order();

  // Route 1: minimum principle, cap(y) <= n * nu^y(x) on every edge.
  MReport measure_report{true, std::nullopt, "measure-m"};
  for (int y = 0; y < n && measure_report.verdict; ++y) {
    EquilibriumMeasure m = solve_equilibrium(net, y);
    for (int x : net.neighbors(y))
      if (m.capacity > n * m.values[x]) {
        measure_report.verdict = false;
        measure_report.witness = MWitness{
            net.vertex_name(x), net.vertex_name(y),
            "cap(y) = " + to_string(m.capacity) + " > n*nu^y(x) = " +
                to_string(n * m.values[x])};
        break;
      }
  }

  // Route 2: entrywise sign of the group inverse.
  bool sign_verdict = true;
  std::optional<MWitness> sign_witness;
  RationalMatrix g = group_inverse(net);
  for (int x = 0; x < n && sign_verdict; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && g(x, y) > 0) {
        sign_verdict = false;
        sign_witness = MWitness{net.vertex_name(x), net.vertex_name(y),
                                "L#(x,y) = " + to_string(g(x, y)) + " > 0"};
        break;
      }

  if (sign_verdict != measure_report.verdict)
    throw FormMismatch("minimum-principle and sign tests disagree");
  measure_report.method = "measure-m/group-inverse-sign";
  return measure_report;
}

MReport sufficient_m_test(std::span<const EquilibriumArray> arrays) {
  for (const EquilibriumArray& a : arrays) {
    if (a.length < 2) continue;  // trivially holds when l(y) = 1
    const Rational& q1 = a.levels[1];
    Rational lhs = 0;
    for (int i = 2; i <= a.length; ++i)
      lhs += a.multiplicities[i] * (a.levels[i] - q1);
    if (lhs > q1)
      return {false,
              MWitness{"", "vertex " + std::to_string(a.base_vertex),
                       "sum m_i(q_i - q_1) = " + to_string(lhs) + " > q_1 = " + to_string(q1)},
              "equil-m"};
  }
  return {true, std::nullopt, "equil-m"};
}

}  // namespace netpot

#include "netpot/json_io.hpp"

#include <nlohmann/json.hpp>

#include "netpot/errors.hpp"

namespace netpot {

using nlohmann::json;

json matrix_to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"order", m.order()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const json& j) {
  int order = j.at("order").get<int>();
  RationalMatrix m(order);
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != order) throw ParseError("matrix row count mismatch");
  for (int i = 0; i < order; ++i) {
    if (static_cast<int>(entries[i].size()) != order)
      throw ParseError("matrix column count mismatch");
    for (int k = 0; k < order; ++k)
      m(i, k) = parse_rational(entries[i][k].get<std::string>());
  }
  return m;
}

json array_to_json(const BiregularArray& a) {
  return json{{"k0", a.k0}, {"k1", a.k1}, {"D0", a.D0}, {"D1", a.D1},
              {"c0", a.c0}, {"c1", a.c1}};
}

BiregularArray array_from_json(const json& j) {
  BiregularArray a;
  try {
    a.k0 = j.at("k0").get<long long>();
    a.k1 = j.at("k1").get<long long>();
    a.D0 = j.at("D0").get<int>();
    a.D1 = j.at("D1").get<int>();
    a.c0 = j.at("c0").get<std::vector<long long>>();
    a.c1 = j.at("c1").get<std::vector<long long>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad array JSON: ") + e.what());
  }
  if (static_cast<int>(a.c0.size()) != a.D0 || static_cast<int>(a.c1.size()) != a.D1)
    throw ParseError("c-sequence length must equal the diameter");
  return a;
}

json counts_to_json(const DerivedCounts& c) {
  auto ints = [](const std::vector<Integer>& v) {
    json out = json::array();
    for (const Integer& x : v) out.push_back(x.str());
    return out;
  };
  return json{{"n", c.n.str()},
              {"k0", ints(c.k[0])}, {"k1", ints(c.k[1])},
              {"B0", ints(c.B[0])}, {"B1", ints(c.B[1])}};
}

json feasibility_to_json(const FeasibilityReport& r) {
  json failures = json::array();
  for (const auto& [id, detail] : r.failures)
    failures.push_back(json{{"condition", id}, {"detail", detail}});
  return json{{"passed", r.passed}, {"failures", std::move(failures)}};
}

json mreport_to_json(const MReport& r) {
  json out{{"verdict", r.verdict}, {"method", r.method}};
  if (r.witness) {
    json w{{"detail", r.witness->detail}};
    if (!r.witness->x.empty() || !r.witness->y.empty()) {
      w["x"] = r.witness->x;
      w["y"] = r.witness->y;
    }
    out["witness"] = std::move(w);
  }
  return out;
}

json measure_to_json(const EquilibriumMeasure& m, const Network& net) {
  json values = json::object();
  for (int x = 0; x < net.order(); ++x)
    values[net.vertex_name(x)] = to_string(m.values[x]);
  return json{{"base_vertex", net.vertex_name(m.base_vertex)},
              {"values", std::move(values)},
              {"capacity", to_string(m.capacity)}};
}

json equilibrium_to_json(const DbrgEquilibrium& e) {
  auto rats = [](const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& x : v) out.push_back(to_string(x));
    return out;
  };
  return json{{"q0", rats(e.q[0])}, {"q1", rats(e.q[1])}};
}

json search_hit_to_json(const SearchHit& hit) {
  json out{{"array", array_to_json(hit.array)},
           {"n", static_cast<long long>(hit.n)},
           {"m_property", hit.m_property.verdict},
           {"case", to_string(hit.label)}};
  if (!hit.notes.empty()) out["notes"] = hit.notes;
  return out;
}

}  // namespace netpot

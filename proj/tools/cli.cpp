#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "netpot/errors.hpp"
#include "netpot/json_io.hpp"

namespace netpot::cli {

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output '" + path + "'");
    out << text << "\n";
  }
};

// Display-only decimal expansion with `digits` places, truncated toward zero.
std::string decimal_string(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = numerator(r) * scale / denominator(r);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (negative ? "-" : "") + body;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
}

BiregularArray load_array(const std::string& path) { return array_from_json(load_json(path)); }

void attach_decimals(json& report, const std::vector<std::string>& keys, int digits) {
  // Adds "<key>_decimal" next to rational-string fields when --decimal is on.
  for (const auto& key : keys) {
    if (!report.contains(key)) continue;
    if (report[key].is_string()) {
      report[key + "_decimal"] = decimal_string(parse_rational(report[key]), digits);
    } else if (report[key].is_array()) {
      json dec = json::array();
      for (const auto& item : report[key])
        dec.push_back(decimal_string(parse_rational(item.get<std::string>()), digits));
      report[key + "_decimal"] = std::move(dec);
    }
  }
}

int cmd_verify(const std::string& graph_path, bool force, const Output& out) {
  Network net = read_network(graph_path);
  if (net.order() > 5000 && !force)
    throw ParamOutOfRange("graph larger than 5000 vertices; pass --force for the O(n^3) check");

  auto array = detect_dbrg(net);
  if (!array) throw InconsistentParams("graph is not distance-biregular");

  auto sides = stable_sets(net);
  // Match the detected labeling: side 0 is the class whose degree is k0;
  // when k0 == k1 the labeling is immaterial (both q-arrays coincide).
  int first_side = (*sides)[0];
  long long first_degree = static_cast<long long>(net.neighbors(0).size());
  auto side_of = [&](int x) {
    if (array->k0 == array->k1) return (*sides)[x];
    bool first_is_v0 = first_degree == array->k0;
    return ((*sides)[x] == first_side) == first_is_v0 ? 0 : 1;
  };

  DistanceTable dist = distances(net);
  RationalMatrix oracle = group_inverse(net);
  const int n = net.order();
  int checked = 0;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      Rational closed = group_inverse_entry(*array, side_of(y), dist(x, y));
      if (closed != oracle(x, y)) {
        json mismatch{{"x", net.vertex_name(x)},
                      {"y", net.vertex_name(y)},
                      {"closed_form", to_string(closed)},
                      {"oracle", to_string(oracle(x, y))}};
        out.write(json{{"match", false}, {"first_mismatch", mismatch}}.dump(2));
        return kExitFalse;
      }
      ++checked;
    }
  out.write(json{{"match", true},
                 {"entries_checked", checked},
                 {"array", array_to_json(*array)}}
                .dump(2));
  std::cerr << "all " << checked << " entries match\n";
  return kExitTrue;
}

int run_impl(int argc, const char* const* argv) {
  CLI::App app{"Exact equilibrium measures, Laplacian group inverses and "
               "M-property tests for weighted networks and distance-biregular arrays"};
  app.require_subcommand(1);

  Output out;
  int decimal = 0;
  app.add_option("--out", out.path, "Write the report to PATH instead of stdout");
  app.add_option("--decimal", decimal, "Add display-only decimal columns with N digits");

  std::string array_path, graph_path, vertex, input_path;
  int side = -1, dist = -1;
  bool force = false;
  long long max_k = 5, max_n = 60;
  int max_d = 8;
  long long qsd_r = 0, qsd_k = 0, qsd_lambda = 0, qsd_y = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Feasibility-check an intersection array");
  validate_cmd->add_option("--array", array_path)->required();

  auto* derive_cmd = app.add_subcommand("derive", "Derived counts k_{l,i}, B_{l,i}, n");
  derive_cmd->add_option("--array", array_path)->required();

  auto* equil_cmd = app.add_subcommand("equil", "Equilibrium measure of a vertex, or closed-form q-arrays");
  equil_cmd->add_option("--graph", graph_path);
  equil_cmd->add_option("--vertex", vertex);
  equil_cmd->add_option("--array", array_path);

  auto* green_cmd = app.add_subcommand("green", "Group inverse of the Laplacian");
  green_cmd->add_option("--graph", graph_path);
  green_cmd->add_option("--array", array_path);
  green_cmd->add_option("--side", side);

  std::vector<std::string> pair_vals;
  auto* resist_cmd = app.add_subcommand("resist", "Effective resistance");
  resist_cmd->add_option("--graph", graph_path);
  resist_cmd->add_option("--pair", pair_vals, "two vertex ids")->expected(2);
  resist_cmd->add_option("--array", array_path);
  resist_cmd->add_option("--side", side);
  resist_cmd->add_option("--dist", dist);

  auto* checkm_cmd = app.add_subcommand("check-m", "M-property verdict");
  checkm_cmd->add_option("--graph", graph_path);
  checkm_cmd->add_option("--array", array_path);

  auto* classify_cmd = app.add_subcommand("classify", "Diameter-bounded case label");
  classify_cmd->add_option("--array", array_path)->required();

  auto* recover_cmd = app.add_subcommand(
      "recover", "Intersection array from q-arrays and multiplicities (JSON: q0,q1,m0,m1)");
  recover_cmd->add_option("--input", input_path)->required();

  auto* detect_cmd = app.add_subcommand("detect", "Detect distance-biregularity of a graph");
  detect_cmd->add_option("--graph", graph_path)->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check closed-form group inverse against the dense oracle");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_flag("--force", force, "Allow graphs above 5000 vertices");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive feasible-array sweep (JSONL)");
  search_cmd->add_option("--max-k", max_k);
  search_cmd->add_option("--max-d", max_d);
  search_cmd->add_option("--max-n", max_n);

  auto* qsd_cmd = app.add_subcommand("qsd", "Quasi-symmetric-design M-property condition");
  qsd_cmd->add_option("--r", qsd_r)->required();
  qsd_cmd->add_option("--k", qsd_k)->required();
  qsd_cmd->add_option("--lambda", qsd_lambda)->required();
  qsd_cmd->add_option("--y", qsd_y)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (validate_cmd->parsed()) {
    FeasibilityReport report = validate(load_array(array_path));
    out.write(feasibility_to_json(report).dump(2));
    return report.passed ? kExitTrue : kExitFalse;
  }

  if (derive_cmd->parsed()) {
    out.write(counts_to_json(derive_counts(load_array(array_path))).dump(2));
    return kExitTrue;
  }

  if (equil_cmd->parsed()) {
    if (!graph_path.empty()) {
      if (vertex.empty()) throw ParseError("equil --graph needs --vertex");
      Network net = read_network(graph_path);
      EquilibriumMeasure m = solve_equilibrium(net, net.index_of(vertex));
      EquilibriumArray arr = equilibrium_array(m, distances(net));
      json report = measure_to_json(m, net);
      json levels = json::array();
      for (const Rational& q : arr.levels) levels.push_back(to_string(q));
      report["levels"] = std::move(levels);
      report["multiplicities"] = arr.multiplicities;
      report["length"] = arr.length;
      attach_decimals(report, {"capacity", "levels"}, decimal);
      out.write(report.dump(2));
      return kExitTrue;
    }
    if (array_path.empty()) throw ParseError("equil needs --graph or --array");
    json report = equilibrium_to_json(equilibrium_arrays(load_array(array_path)));
    if (decimal > 0) attach_decimals(report, {"q0", "q1"}, decimal);
    out.write(report.dump(2));
    return kExitTrue;
  }

  if (green_cmd->parsed()) {
    if (!graph_path.empty()) {
      out.write(matrix_to_json(group_inverse(read_network(graph_path))).dump(2));
      return kExitTrue;
    }
    if (array_path.empty()) throw ParseError("green needs --graph or --array");
    BiregularArray a = load_array(array_path);
    json report = json::object();
    for (int l = 0; l < 2; ++l) {
      if (side >= 0 && side != l) continue;
      json entries = json::array();
      for (int j = 0; j <= a.D(l); ++j)
        entries.push_back(to_string(group_inverse_entry(a, l, j)));
      report["side" + std::to_string(l)] = std::move(entries);
    }
    if (decimal > 0) attach_decimals(report, {"side0", "side1"}, decimal);
    out.write(report.dump(2));
    return kExitTrue;
  }

  if (resist_cmd->parsed()) {
    Rational r;
    if (!graph_path.empty()) {
      if (pair_vals.size() != 2) throw ParseError("resist --graph needs --pair u v");
      Network net = read_network(graph_path);
      r = effective_resistance(net, net.index_of(pair_vals[0]), net.index_of(pair_vals[1]));
    } else {
      if (array_path.empty() || side < 0 || dist < 0)
        throw ParseError("resist needs --graph --pair, or --array --side --dist");
      r = dbrg_effective_resistance(load_array(array_path), side, dist);
    }
    json report{{"resistance", to_string(r)}};
    if (decimal > 0) attach_decimals(report, {"resistance"}, decimal);
    out.write(report.dump(2));
    return kExitTrue;
  }

  if (checkm_cmd->parsed()) {
    MReport report;
    if (!graph_path.empty()) {
      report = m_property_general(read_network(graph_path));
    } else {
      if (array_path.empty()) throw ParseError("check-m needs --graph or --array");
      report = m_property_array(load_array(array_path));
    }
    out.write(mreport_to_json(report).dump(2));
    return report.verdict ? kExitTrue : kExitFalse;
  }

  if (classify_cmd->parsed()) {
    out.write(json{{"case", to_string(classify_case(load_array(array_path)))}}.dump(2));
    return kExitTrue;
  }

  if (recover_cmd->parsed()) {
    json in = load_json(input_path);
    DbrgEquilibrium e;
    std::array<std::vector<long long>, 2> mults;
    for (int l = 0; l < 2; ++l) {
      for (const auto& item : in.at("q" + std::to_string(l)))
        e.q[l].push_back(parse_rational(item.get<std::string>()));
      mults[l] = in.at("m" + std::to_string(l)).get<std::vector<long long>>();
    }
    out.write(array_to_json(recover_array(e, mults)).dump(2));
    return kExitTrue;
  }

  if (detect_cmd->parsed()) {
    auto array = detect_dbrg(read_network(graph_path));
    if (!array) {
      out.write(json{{"distance_biregular", false}}.dump(2));
      return kExitFalse;
    }
    json report = array_to_json(*array);
    report["distance_biregular"] = true;
    out.write(report.dump(2));
    return kExitTrue;
  }

  if (verify_cmd->parsed()) return cmd_verify(graph_path, force, out);

  if (search_cmd->parsed()) {
    std::ostringstream lines;
    for (const SearchHit& hit : search_arrays({max_k, max_d, max_n}))
      lines << search_hit_to_json(hit).dump() << "\n";
    std::string text = lines.str();
    if (!text.empty()) text.pop_back();  // Output::write appends the final newline
    out.write(text);
    return kExitTrue;
  }

  if (qsd_cmd->parsed()) {
    QsdParams p{qsd_r, qsd_k, qsd_lambda, qsd_y};
    bool verdict = qsd_m_condition(p);
    json report{{"m_property", verdict}, {"array", array_to_json(build_case5_array(p))}};
    out.write(report.dump(2));
    return verdict ? kExitTrue : kExitFalse;
  }

  return kExitError;
}

}  // namespace

int run(int argc, const char* const* argv) {
  try {
    return run_impl(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace netpot::cli

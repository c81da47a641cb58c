/*
 * vstab — command-line front end for the verystable library.
 *
 * Subcommands: classify, mult, dynkin, witness, minuscule, table1,
 * feasible, batch.  All output is JSON (compact by default, indented
 * with --pretty) with alphabetically sorted keys, so any scenario's
 * output is byte-identical across runs.
 *
 * Exit codes: classify exits 0 when very stable, 3 when wobbly (a
 * successful run), 1 on input errors; every other subcommand exits 0
 * on success and 1 on input errors; batch exits 0 iff every scenario
 * parsed and ran.
 */
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verystable/classify.hpp"
#include "verystable/equivmult.hpp"
#include "verystable/rootsystem.hpp"

using json = nlohmann::json;
using namespace verystable;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWobbly = 3;

std::vector<Int> parse_coord_list(const std::string& text) {
  std::vector<Int> coords;
  std::size_t p = 0;
  while (p <= text.size()) {
    const std::size_t q = std::min(text.find(',', p), text.size());
    const std::string tok = text.substr(p, q - p);
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + tok + "' in coordinate list '" + text + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("bad integer '" + tok + "' in coordinate list '" + text + "'");
    coords.push_back(v);
    p = q + 1;
  }
  return coords;
}

/** Interprets wire coordinates per --basis: fundamental coweights or simple coroots. */
Coweight read_coweight(const RootSystem& rs, const std::string& text, const std::string& basis) {
  const std::vector<Int> coords = parse_coord_list(text);
  if (static_cast<int>(coords.size()) != rs.rank())
    throw std::invalid_argument("coweight '" + text + "' has " +
                                std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(rs.rank()));
  if (basis == "coroot") return rs.from_coroot_basis(coords);
  return Coweight(coords);
}

MultiplicityDivisor read_divisor(const RootSystem& rs, const std::string& text,
                                 const std::string& basis) {
  MultiplicityDivisor d = MultiplicityDivisor::parse(rs, text);
  if (basis == "coroot") {
    MultiplicityDivisor converted;
    for (const auto& [label, mu] : d.points)
      converted.add(rs, label, rs.from_coroot_basis(mu.coords));
    return converted;
  }
  return d;
}

json coweight_json(const Coweight& mu) {
  json j = json::array();
  for (Int v : mu.coords) j.push_back(v);
  return j;
}

json int_vector_json(const std::vector<int>& v) {
  json j = json::array();
  for (int x : v) j.push_back(x);
  return j;
}

constexpr long long kJsonIntMax = 9223372036854775807LL;

/**
 * Coefficient array for JSON: plain integers when every coefficient
 * fits in 64 bits, decimal strings otherwise (all-or-nothing, so the
 * array stays homogeneous).
 */
json coeffs_json(const IntPoly& p) {
  bool fits = true;
  for (const BigInt& c : p.coeffs()) {
    if (c > kJsonIntMax || c < -kJsonIntMax - 1) {
      fits = false;
      break;
    }
  }
  json j = json::array();
  for (const BigInt& c : p.coeffs()) {
    if (fits)
      j.push_back(static_cast<long long>(c));
    else
      j.push_back(c.str());
  }
  return j;
}

/** polynomial_coeffs value: coefficient array, or "not_polynomial". */
json poly_or_flag_json(const FactoredProduct& fp) {
  const auto tp = fp.to_polynomial();
  if (tp.is_polynomial) return coeffs_json(tp.poly);
  return json("not_polynomial");
}

json do_classify(const RootSystem& rs, const MultiplicityDivisor& divisor,
                 bool* very_stable) {
  const Verdict v = classify(rs, divisor);
  if (very_stable) *very_stable = v.very_stable;
  json j;
  j["type"] = rs.type().str();
  j["very_stable"] = v.very_stable;
  json ws = json::array();
  for (const auto& w : v.witnesses) {
    json wj;
    wj["point"] = w.point;
    wj["alpha_coroot_coords"] = int_vector_json(w.root.coroot_coords);
    wj["root_coords"] = int_vector_json(w.root.simple_coords);
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  return j;
}

/**
 * Report row shared by mult and table1: the factored multiplicity, its
 * coefficient expansion (or "not_polynomial"), and the comparisons.
 * matches_table1 is null when the coweight has no reference-table row.
 */
json report_row(const RootSystem& rs, const Coweight& mu, const std::vector<Int>& genus_list) {
  json j;
  j["type"] = rs.type().str();
  j["coweight"] = coweight_json(mu);
  json gl = json::array();
  for (Int g : genus_list) gl.push_back(g);
  j["genus_list"] = gl;

  const FactoredProduct m = virtual_multiplicity(rs, mu, genus_list.front());
  bool genus_independent = true;
  for (std::size_t i = 1; i < genus_list.size(); ++i) {
    if (!(virtual_multiplicity(rs, mu, genus_list[i]) == m)) genus_independent = false;
  }
  j["genus_independent"] = genus_independent;
  j["factored"] = m.str();
  j["polynomial_coeffs"] = poly_or_flag_json(m);

  // Reference-table comparison applies only to fundamental coweights
  // of covered simple types that have a closed-form row.
  j["matches_table1"] = nullptr;
  if (rs.type().is_simple() && reference_table_covers(rs.type().factors[0])) {
    int fundamental = 0;
    Int weight_sum = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu.coords[i] != 0) {
        weight_sum += mu.coords[i];
        fundamental = i + 1;
      }
    }
    if (weight_sum == 1) {
      try {
        const FactoredProduct ref = reference_closed_form(rs.type().factors[0], fundamental);
        j["matches_table1"] = m.rational_equals(ref);
      } catch (const std::domain_error&) {
        // No row for this fundamental index; leave null.
      }
    }
  }
  j["matches_dynkin"] = m.rational_equals(dynkin_polynomial(rs, mu));
  return j;
}

json do_dynkin(const RootSystem& rs, const Coweight& mu) {
  const FactoredProduct d = dynkin_polynomial(rs, mu);
  json j;
  j["type"] = rs.type().str();
  j["coweight"] = coweight_json(mu);
  j["factored"] = d.str();
  j["polynomial_coeffs"] = poly_or_flag_json(d);
  j["dimension"] = weyl_dimension(rs, mu).str();
  return j;
}

json do_witness(const RootSystem& rs, const Coweight& mu) {
  const auto [root, coroot] = wobbly_witness(rs, mu);
  json j;
  j["type"] = rs.type().str();
  j["coweight"] = coweight_json(mu);
  j["alpha_coroot_coords"] = int_vector_json(root.coroot_coords);
  j["root_coords"] = int_vector_json(root.simple_coords);
  j["shifted_coweight"] = coweight_json(mu - coroot);
  return j;
}

json do_minuscule(const RootSystem& rs, const std::string& coweight_text,
                  const std::string& basis) {
  json j;
  j["type"] = rs.type().str();
  json f = json::array();
  for (int i : rs.minuscule_fundamentals()) f.push_back(i);
  j["minuscule_fundamentals"] = f;
  if (!coweight_text.empty()) {
    const Coweight mu = read_coweight(rs, coweight_text, basis);
    j["coweight"] = coweight_json(mu);
    j["minuscule"] = rs.is_minuscule(mu);
  }
  return j;
}

json do_table1(const RootSystem& rs, const std::vector<Int>& genus_list) {
  const std::vector<TableRow> rows = reference_table(rs, genus_list);
  json out;
  out["type"] = rs.type().str();
  json rows_json = json::array();
  bool all_match = true;
  for (const TableRow& row : rows) {
    json j;
    j["type"] = rs.type().str();
    j["index"] = row.index;
    j["coweight"] = coweight_json(row.coweight);
    json gl = json::array();
    for (Int g : row.genus_list) gl.push_back(g);
    j["genus_list"] = gl;
    j["genus_independent"] = row.genus_independent;
    j["factored"] = row.multiplicity.str();
    j["polynomial_coeffs"] = coeffs_json(row.poly);
    j["matches_table1"] = row.matches_reference;
    j["matches_dynkin"] = row.matches_dynkin;
    all_match = all_match && row.matches_reference && row.matches_dynkin &&
                row.genus_independent;
    rows_json.push_back(j);
  }
  out["rows"] = rows_json;
  out["all_match"] = all_match;
  return out;
}

json do_feasible(const RootSystem& rs, const Coweight& nu) {
  const FeasibleDecomposition fd = component_feasible(rs, nu);
  json j;
  j["type"] = rs.type().str();
  j["coweight"] = coweight_json(nu);
  j["feasible"] = fd.feasible;
  json terms = json::array();
  for (const auto& [index, mult] : fd.terms) {
    json term;
    term["index"] = index;
    term["multiplicity"] = mult;
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

std::vector<Int> genus_list_from_json(const json& j) {
  std::vector<Int> out;
  if (j.is_number_integer()) {
    out.push_back(j.get<Int>());
  } else if (j.is_array()) {
    for (const auto& g : j) {
      if (!g.is_number_integer()) throw std::invalid_argument("genus entries must be integers");
      out.push_back(g.get<Int>());
    }
  } else {
    throw std::invalid_argument("genus must be an integer or an array of integers");
  }
  return out;
}

/**
 * Runs one batch scenario (keys mirror the CLI flags: command, type,
 * divisor/coweight, genus, basis).  Throws on malformed scenarios and
 * on command errors; the caller turns that into an error line.
 */
json run_scenario(const json& scenario) {
  if (!scenario.is_object()) throw std::invalid_argument("scenario must be a JSON object");
  const std::string command = scenario.value("command", "");
  const std::string type = scenario.value("type", "");
  if (command.empty()) throw std::invalid_argument("scenario is missing 'command'");
  if (type.empty()) throw std::invalid_argument("scenario is missing 'type'");
  const std::string basis = scenario.value("basis", "coweight");
  if (basis != "coweight" && basis != "coroot")
    throw std::invalid_argument("basis must be 'coweight' or 'coroot'");
  std::vector<Int> genus_list;
  if (scenario.contains("genus")) genus_list = genus_list_from_json(scenario.at("genus"));

  const RootSystem rs(type);
  if (command == "classify")
    return do_classify(rs, read_divisor(rs, scenario.value("divisor", ""), basis), nullptr);
  if (command == "mult")
    return report_row(rs, read_coweight(rs, scenario.value("coweight", ""), basis),
                      genus_list.empty() ? std::vector<Int>{2} : genus_list);
  if (command == "dynkin")
    return do_dynkin(rs, read_coweight(rs, scenario.value("coweight", ""), basis));
  if (command == "witness")
    return do_witness(rs, read_coweight(rs, scenario.value("coweight", ""), basis));
  if (command == "minuscule") return do_minuscule(rs, scenario.value("coweight", ""), basis);
  if (command == "table1")
    return do_table1(rs, genus_list.empty() ? std::vector<Int>{2, 3} : genus_list);
  if (command == "feasible")
    return do_feasible(rs, read_coweight(rs, scenario.value("coweight", ""), basis));
  throw std::invalid_argument("unknown command '" + command + "'");
}

struct Output {
  bool pretty = false;
  void emit(const json& j, std::ostream& out = std::cout) const {
    if (pretty)
      out << j.dump(2) << "\n";
    else
      out << j.dump() << "\n";
  }
  int error(const std::string& message) const {
    json j;
    j["error"] = message;
    emit(j, std::cerr);
    return kExitError;
  }
};

int run_batch(const std::string& path, const Output& out) {
  std::ifstream in(path);
  if (!in) return out.error("cannot open scenario file '" + path + "'");
  std::string line;
  int line_number = 0;
  int failures = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json result;
    try {
      result = run_scenario(json::parse(line));
    } catch (const std::exception& e) {
      result = json();
      result["error"] = e.what();
      result["line"] = line_number;
      ++failures;
    }
    out.emit(result);
  }
  if (failures > 0) {
    std::cerr << failures << " of " << line_number << " scenario lines failed\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of Borel-type fixed points and their "
               "equivariant multiplicities"};
  app.require_subcommand(1);

  Output out;
  std::string basis = "coweight";
  std::vector<Int> genus_list;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Compact JSON output (the default)");
  app.add_flag("--pretty", out.pretty, "Indented JSON output");
  app.add_option("--basis", basis, "Input coordinate basis: coweight (default) or coroot")
      ->check(CLI::IsMember({"coweight", "coroot"}));
  app.add_option("--genus", genus_list,
                 "Genus (repeatable; default 2 for mult, 2 and 3 for table1)");

  std::string type;
  std::string divisor_text;
  std::string coweight_text;
  std::string batch_path;

  CLI::App* classify_cmd = app.add_subcommand("classify", "Very-stability of a divisor");
  classify_cmd->add_option("type", type, "Lie type, e.g. G2 or A2+A2")->required();
  classify_cmd->add_option("divisor", divisor_text,
                           "Divisor as 'label:coords;label:coords' (may be empty)");

  CLI::App* mult_cmd = app.add_subcommand("mult", "Virtual equivariant multiplicity");
  mult_cmd->add_option("type", type, "Lie type")->required();
  mult_cmd->add_option("coweight", coweight_text, "Total coweight, e.g. 1,0,0")->required();

  CLI::App* dynkin_cmd = app.add_subcommand("dynkin", "Dynkin polynomial of a coweight");
  dynkin_cmd->add_option("type", type, "Lie type")->required();
  dynkin_cmd->add_option("coweight", coweight_text, "Dominant coweight")->required();

  CLI::App* witness_cmd = app.add_subcommand("witness", "Wobbly witness for a coweight");
  witness_cmd->add_option("type", type, "Lie type")->required();
  witness_cmd->add_option("coweight", coweight_text, "Dominant non-minuscule coweight")
      ->required();

  CLI::App* minuscule_cmd =
      app.add_subcommand("minuscule", "Minuscule fundamentals and coweight test");
  minuscule_cmd->add_option("type", type, "Lie type")->required();
  minuscule_cmd->add_option("coweight", coweight_text, "Optional coweight to test");

  CLI::App* table1_cmd = app.add_subcommand("table1", "Closed-form reference table rows");
  table1_cmd->add_option("type", type, "Simple covered type, e.g. D5")->required();

  CLI::App* feasible_cmd =
      app.add_subcommand("feasible", "Minuscule-sum feasibility of a coweight");
  feasible_cmd->add_option("type", type, "Lie type")->required();
  feasible_cmd->add_option("coweight", coweight_text, "Dominant coweight")->required();

  CLI::App* batch_cmd = app.add_subcommand("batch", "Run JSON-lines scenarios from a file");
  batch_cmd->add_option("file", batch_path, "Scenario file, one JSON object per line")
      ->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(batch_cmd)) return run_batch(batch_path, out);
    const RootSystem rs(type);
    if (app.got_subcommand(classify_cmd)) {
      bool very_stable = true;
      out.emit(do_classify(rs, read_divisor(rs, divisor_text, basis), &very_stable));
      return very_stable ? kExitOk : kExitWobbly;
    }
    if (app.got_subcommand(mult_cmd)) {
      out.emit(report_row(rs, read_coweight(rs, coweight_text, basis),
                          genus_list.empty() ? std::vector<Int>{2} : genus_list));
      return kExitOk;
    }
    if (app.got_subcommand(dynkin_cmd)) {
      out.emit(do_dynkin(rs, read_coweight(rs, coweight_text, basis)));
      return kExitOk;
    }
    if (app.got_subcommand(witness_cmd)) {
      out.emit(do_witness(rs, read_coweight(rs, coweight_text, basis)));
      return kExitOk;
    }
    if (app.got_subcommand(minuscule_cmd)) {
      out.emit(do_minuscule(rs, coweight_text, basis));
      return kExitOk;
    }
    if (app.got_subcommand(table1_cmd)) {
      out.emit(do_table1(rs, genus_list.empty() ? std::vector<Int>{2, 3} : genus_list));
      return kExitOk;
    }
    if (app.got_subcommand(feasible_cmd)) {
      out.emit(do_feasible(rs, read_coweight(rs, coweight_text, basis)));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    return out.error(e.what());
  }
  return out.error("no subcommand");
}

#include "tlt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tlt/numerics.hpp"
#include "tlt/projection.hpp"

namespace tlt::cli {

using json = nlohmann::ordered_json;
using majorana::ConfigLabel;
using majorana::Parity;

namespace {

constexpr int kMaxCutoff = 25;
constexpr int kDriftCutoff = 20;

std::string ghz(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%#.4g", v);
  return buf;
}

std::string ratio_text(double v) {
  if (std::isnan(v)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string grid_value(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string parity_text(Parity p) { return p == Parity::even ? "+1" : "-1"; }

Parity parity_from_text(std::string_view text) {
  const auto t = lower(text);
  if (t == "even" || t == "+1" || t == "1") return Parity::even;
  if (t == "odd" || t == "-1") return Parity::odd;
  throw ConfigError("parity: expected even|odd|+1|-1 (got '" + std::string(text) + "')");
}

ConfigLabel label_from_text(std::string_view text) {
  if (text.size() != 1) throw ConfigError("config_label: expected one of A-F (got '" + std::string(text) + "')");
  try {
    return majorana::config_from_char(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  } catch (const std::invalid_argument&) {
    throw ConfigError("config_label: expected one of A-F (got '" + std::string(text) + "')");
  }
}

template <class F>
auto rethrow_as_config(std::string_view key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

std::string csv_labels(const std::array<num::Pauli, 3>& l) {
  std::string s;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k) s += ',';
    s += num::to_char(l[k]);
  }
  return s;
}

std::string compact_labels(const std::array<num::Pauli, 3>& l) {
  return {num::to_char(l[0]), num::to_char(l[1]), num::to_char(l[2])};
}

proj::PipelineOptions pipeline_options(const RunConfig& cfg) {
  return {cfg.fock_cutoff, cfg.mode, {cfg.params.ng_a, cfg.params.ng_b}, cfg.prefactors};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* kTableHeader = "config,parity,pauli_q,pauli_r,pauli_gamma,analytic_GHz,numeric_GHz,ratio,convention";

std::string csv_row(const proj::CouplingReport& r) {
  std::string s;
  s += majorana::to_char(r.cell.config);
  s += ',' + parity_text(r.cell.parity) + ',' + csv_labels(r.labels) + ',' + ghz(r.analytic) + ',' + ghz(r.numeric) +
       ',' + ratio_text(r.ratio) + ',' + std::string(proj::to_string(r.convention));
  return s;
}

json report_json(const proj::CouplingReport& r) {
  json j;
  j["config"] = std::string(1, majorana::to_char(r.cell.config));
  j["parity"] = majorana::sign(r.cell.parity);
  j["term"] = proj::to_string(r.cell.term);
  j["pauli"] = compact_labels(r.labels);
  j["analytic_GHz"] = r.analytic;
  j["numeric_GHz"] = r.numeric;
  j["numeric_signed_GHz"] = r.numeric_signed;
  j["ratio"] = r.ratio;
  j["convention"] = proj::to_string(r.convention);
  j["residual_weight"] = r.residual_weight;
  j["flagged"] = r.flagged;
  j["decoupled"] = r.decoupled;
  return j;
}

std::vector<double> default_range(SweepVariable v) {
  switch (v) {
    case SweepVariable::flux_q: return SweepSpec{0.0, 0.4, 0.1}.points();
    case SweepVariable::cutoff: return SweepSpec{3.0, 20.0, 1.0}.points();
    case SweepVariable::delta: return SweepSpec{10.0, 40.0, 10.0}.points();
  }
  return {};
}

}  // namespace

SweepSpec SweepSpec::parse(std::string_view text) {
  std::vector<double> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = text.find(':', pos);
    const auto piece = std::string(text.substr(pos, colon == std::string_view::npos ? text.npos : colon - pos));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw ConfigError("range: expected start:end:step (got '" + std::string(text) + "')");
    }
    parts.push_back(v);
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3) throw ConfigError("range: expected start:end:step (got '" + std::string(text) + "')");
  SweepSpec s{parts[0], parts[1], parts[2]};
  s.validate();
  return s;
}

void SweepSpec::validate() const {
  if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step)) {
    throw ConfigError("range: bounds must be finite");
  }
  if (!(start < end)) throw ConfigError("range: start must be below end (got " + grid_value(start) + ":" + grid_value(end) + ")");
  if (!(step > 0.0)) throw ConfigError("range: step must be positive (got " + grid_value(step) + ")");
  if ((end - start) / step > 1e6) throw ConfigError("range: more than 1e6 grid points");
}

std::vector<double> SweepSpec::points() const {
  validate();
  const auto n = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = start + static_cast<double>(k) * step;
  return out;
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::flux_q: return "flux_q";
    case SweepVariable::cutoff: return "cutoff";
    case SweepVariable::delta: return "delta";
  }
  return "";
}

SweepVariable sweep_variable_from_string(std::string_view name) {
  const auto n = lower(name);
  if (n == "flux_q") return SweepVariable::flux_q;
  if (n == "cutoff") return SweepVariable::cutoff;
  if (n == "delta") return SweepVariable::delta;
  throw ConfigError("sweep_variable: unknown variable '" + std::string(name) + "' (flux_q|cutoff|delta)");
}

void RunConfig::validate() const {
  rethrow_as_config("params", [&] {
    params.validate();
    return 0;
  });
  if (fock_cutoff < 2 || fock_cutoff > kMaxCutoff) {
    throw ConfigError("fock_cutoff must lie in [2, " + std::to_string(kMaxCutoff) + "] (got " +
                      std::to_string(fock_cutoff) + ")");
  }
  if (table < 1 || table > 3) throw ConfigError("table: unknown table id " + std::to_string(table) + " (1|2|3)");
  if (!(prefactors.resonator > 0.0) || !(prefactors.transmon > 0.0) || !std::isfinite(prefactors.resonator) ||
      !std::isfinite(prefactors.transmon)) {
    throw ConfigError("charge coupling prefactors must be positive and finite");
  }
  if (range) range->validate();
}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");

  RunConfig cfg;
  auto& p = cfg.params;
  bool gap_seen = false;

  auto number = [](const std::string& key, const json& v) {
    if (!v.is_number()) throw ConfigError(key + ": expected a number");
    return v.get<double>();
  };
  auto integer = [](const std::string& key, const json& v) {
    if (!v.is_number_integer()) throw ConfigError(key + ": expected an integer");
    return v.get<long long>();
  };
  auto text = [](const std::string& key, const json& v) {
    if (!v.is_string()) throw ConfigError(key + ": expected a string");
    return v.get<std::string>();
  };

  for (const auto& [key, v] : doc.items()) {
    if (key == "inductance_nH") p.inductance_nH = number(key, v);
    else if (key == "capacitance_fF") p.capacitance_fF = number(key, v);
    else if (key == "qubit_capacitance_fF") p.qubit_capacitance_fF = number(key, v);
    else if (key == "ej_GHz") p.ej_GHz = number(key, v);
    else if (key == "ejq_GHz") p.ejq_GHz = number(key, v);
    else if (key == "junction_count") {
      const auto k = integer(key, v);
      if (k < 1 || k > 1000) throw ConfigError("junction_count must lie in [1, 1000]");
      p.junction_count = static_cast<int>(k);
    } else if (key == "gap_GHz" || key == "gap_ueV") {
      if (gap_seen) throw ConfigError(key + ": gap_GHz and gap_ueV are mutually exclusive");
      gap_seen = true;
      p.gap = {number(key, v), key == "gap_GHz" ? circuit::GapUnit::ghz : circuit::GapUnit::microelectronvolt};
    } else if (key == "flux_q") p.flux_q = number(key, v);
    else if (key == "ng_a") p.ng_a = number(key, v);
    else if (key == "ng_b") p.ng_b = number(key, v);
    else if (key == "constants") {
      p.constants = rethrow_as_config(key, [&] { return circuit::constants_preset_from_string(lower(text(key, v))); });
    } else if (key == "fock_cutoff") {
      const auto c = integer(key, v);
      if (c < 2 || c > kMaxCutoff) throw ConfigError("fock_cutoff must lie in [2, " + std::to_string(kMaxCutoff) + "]");
      cfg.fock_cutoff = static_cast<int>(c);
    } else if (key == "potential_mode") {
      cfg.mode = rethrow_as_config(key, [&] { return ham::potential_mode_from_string(lower(text(key, v))); });
    } else if (key == "output_format") {
      const auto f = lower(text(key, v));
      if (f == "csv") cfg.format = OutputFormat::csv;
      else if (f == "json") cfg.format = OutputFormat::json;
      else throw ConfigError("output_format: expected csv|json (got '" + f + "')");
    } else if (key == "resonator_charge_prefactor") cfg.prefactors.resonator = number(key, v);
    else if (key == "transmon_charge_prefactor") cfg.prefactors.transmon = number(key, v);
    else if (key == "table") {
      const auto t = integer(key, v);
      if (t < 1 || t > 3) throw ConfigError("table: unknown table id " + std::to_string(t) + " (1|2|3)");
      cfg.table = static_cast<int>(t);
    } else if (key == "config_label") cfg.config_label = label_from_text(text(key, v));
    else if (key == "parity") cfg.parity = parity_from_text(v.is_number_integer() ? std::to_string(v.get<int>()) : text(key, v));
    else if (key == "sweep_variable") cfg.sweep_variable = sweep_variable_from_string(text(key, v));
    else if (key == "range") cfg.range = SweepSpec::parse(text(key, v));
    else throw ConfigError("config: unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string cmd_scales(const RunConfig& cfg) {
  cfg.validate();
  const auto s = circuit::derive_scales(cfg.params);
  const std::vector<std::pair<const char*, double>> rows{
      {"E_Cq", s.E_Cq},           {"E_Cr", s.E_Cr},       {"E_Lr", s.E_Lr},   {"E_Jq_star", s.E_Jq_star},
      {"E_Jq_tuned", s.E_Jq_tuned}, {"E_J", s.E_J},       {"omega_q", s.omega_q}, {"omega_r", s.omega_r},
      {"anharmonicity", s.anharmonicity}, {"gap", s.gap}};
  const auto notes = circuit::reconciliation_notes();
  if (cfg.format == OutputFormat::json) {
    json j;
    for (const auto& [name, v] : rows) j[name] = v;
    j["junction_count"] = s.junction_count;
    j["unit"] = "GHz";
    j["constants"] = circuit::to_string(cfg.params.constants);
    j["reconciliation"] = notes;
    return dump(j);
  }
  std::string out = "quantity,value,unit\n";
  for (const auto& [name, v] : rows) out += std::string(name) + ',' + ghz(v) + ",GHz\n";
  out += "junction_count," + std::to_string(s.junction_count) + ",\n";
  out += "# reconciliation\n";
  for (const auto& n : notes) out += "# " + n + "\n";
  return out;
}

std::string cmd_table(const RunConfig& cfg) {
  cfg.validate();
  const auto scales = circuit::derive_scales(cfg.params);
  const auto rows = proj::coupling_table(cfg.table, scales, pipeline_options(cfg));
  if (cfg.format == OutputFormat::json) {
    auto ref_opts = pipeline_options(cfg);
    ref_opts.cutoff = kDriftCutoff;
    const auto ref = cfg.fock_cutoff == kDriftCutoff ? rows : proj::coupling_table(cfg.table, scales, ref_opts);
    json j;
    j["table"] = cfg.table;
    j["cutoff"] = cfg.fock_cutoff;
    j["potential_mode"] = ham::to_string(cfg.mode);
    j["drift_reference_cutoff"] = kDriftCutoff;
    json arr = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      auto r = report_json(rows[k]);
      r["drift_GHz"] = ref[k].numeric - rows[k].numeric;
      arr.push_back(std::move(r));
    }
    j["rows"] = std::move(arr);
    return dump(j);
  }
  std::string out = std::string(kTableHeader) + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

std::string cmd_degeneracy(const RunConfig& cfg) {
  cfg.validate();
  if (!majorana::is_charge_config(cfg.config_label)) {
    throw ConfigError(std::string("degeneracy: configuration ") + majorana::to_char(cfg.config_label) +
                      " has no charging term (A or B required)");
  }
  const auto scales = circuit::derive_scales(cfg.params);
  const auto grid = cfg.range.value_or(SweepSpec{0.0, 1.0, 0.05}).points();
  const auto points = majorana::degeneracy_scan(majorana::MajoranaConfig::make(cfg.config_label), scales, cfg.parity,
                                                grid, cfg.params.ng_b);
  const auto best = std::min_element(points.begin(), points.end(),
                                     [](const auto& a, const auto& b) { return a.splitting < b.splitting; });
  if (cfg.format == OutputFormat::json) {
    json j;
    j["config"] = std::string(1, majorana::to_char(cfg.config_label));
    j["parity"] = majorana::sign(cfg.parity);
    j["ng_b"] = cfg.params.ng_b;
    json arr = json::array();
    for (const auto& p : points) arr.push_back({{"ng_a", p.ng_a}, {"splitting_GHz", p.splitting}});
    j["points"] = std::move(arr);
    j["minimum"] = {{"ng_a", best->ng_a}, {"splitting_GHz", best->splitting}};
    return dump(j);
  }
  std::string out = "ng_a,splitting_GHz\n";
  for (const auto& p : points) out += grid_value(p.ng_a) + ',' + ghz(p.splitting) + "\n";
  out += "# minimum ng_a=" + grid_value(best->ng_a) + " splitting_GHz=" + ghz(best->splitting) + "\n";
  return out;
}

std::string cmd_sweep(const RunConfig& cfg) {
  cfg.validate();
  const auto grid = cfg.range ? cfg.range->points() : default_range(cfg.sweep_variable);
  const auto var = std::string(to_string(cfg.sweep_variable));
  std::string out = var + "," + kTableHeader + "\n";
  json arr = json::array();
  for (double x : grid) {
    RunConfig point = cfg;
    switch (cfg.sweep_variable) {
      case SweepVariable::flux_q: point.params.flux_q = x; break;
      case SweepVariable::cutoff: point.fock_cutoff = static_cast<int>(std::lround(x)); break;
      case SweepVariable::delta: point.params.gap = {x, circuit::GapUnit::ghz}; break;
    }
    point.range.reset();
    point.validate();
    const auto rows =
        proj::coupling_table(point.table, circuit::derive_scales(point.params), pipeline_options(point));
    for (const auto& r : rows) {
      if (cfg.format == OutputFormat::json) {
        auto j = report_json(r);
        j[var] = x;
        arr.push_back(std::move(j));
      } else {
        out += grid_value(x) + ',' + csv_row(r) + "\n";
      }
    }
  }
  if (cfg.format == OutputFormat::json) {
    json j;
    j["variable"] = var;
    j["table"] = cfg.table;
    j["rows"] = std::move(arr);
    return dump(j);
  }
  return out;
}

std::string cmd_selection(const RunConfig& cfg) {
  cfg.validate();
  const auto rows = proj::parity_selection_table(circuit::derive_scales(cfg.params), pipeline_options(cfg));
  if (cfg.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(report_json(r));
    return dump(json{{"rows", std::move(arr)}});
  }
  std::string out = "config,parity,term,pauli_q,pauli_r,pauli_gamma,analytic_GHz,numeric_GHz,status\n";
  for (const auto& r : rows) {
    out += std::string(1, majorana::to_char(r.cell.config)) + ',' + parity_text(r.cell.parity) + ',' +
           std::string(proj::to_string(r.cell.term)) + ',' + csv_labels(r.labels) + ',' + ghz(r.analytic) + ',' +
           ghz(r.numeric) + ',' + (r.decoupled ? "decoupled" : "coupled") + "\n";
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transmon / Majorana coupling toolkit"};
  app.name("tlt");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, mode, parity, format, label, range, variable;
  int table = 1;
  int cutoff = 5;
  auto* o_config = app.add_option("--config", config_path, "Flat JSON configuration file");
  auto* o_table = app.add_option("--table", table, "Coupling table id (1|2|3)");
  auto* o_cutoff = app.add_option("--cutoff", cutoff, "Fock cutoff (dimension cutoff+1)");
  auto* o_mode = app.add_option("--mode", mode, "quartic_ejq|quartic_ejstar|full_cosine|harmonic");
  auto* o_parity = app.add_option("--parity", parity, "even|odd");
  auto* o_format = app.add_option("--format", format, "csv|json");
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  auto* o_label = app.add_option("--label", label, "Majorana configuration A-F");
  auto* o_range = app.add_option("--range", range, "start:end:step");
  auto* o_variable = app.add_option("--variable", variable, "flux_q|cutoff|delta");

  auto* c_scales = app.add_subcommand("scales", "Derived energy scales and reconciliation notes");
  auto* c_table = app.add_subcommand("table", "Regenerate coupling table 1, 2 or 3");
  auto* c_degeneracy = app.add_subcommand("degeneracy", "Majorana splitting versus n_g^(a)");
  auto* c_sweep = app.add_subcommand("sweep", "Coupling table versus flux_q, cutoff or delta");
  auto* c_selection = app.add_subcommand("selection", "Parity selection pattern for configurations A-F");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::config_error;
  }

  try {
    RunConfig cfg = o_config->count() ? load_config(config_path) : parse_config("{}");
    if (o_table->count()) cfg.table = table;
    if (o_cutoff->count()) cfg.fock_cutoff = cutoff;
    if (o_mode->count()) cfg.mode = rethrow_as_config("--mode", [&] { return ham::potential_mode_from_string(lower(mode)); });
    if (o_parity->count()) cfg.parity = parity_from_text(parity);
    if (o_format->count()) {
      const auto f = lower(format);
      if (f != "csv" && f != "json") throw ConfigError("--format: expected csv|json (got '" + format + "')");
      cfg.format = f == "csv" ? OutputFormat::csv : OutputFormat::json;
    }
    if (o_label->count()) cfg.config_label = label_from_text(label);
    if (o_range->count()) cfg.range = SweepSpec::parse(range);
    if (o_variable->count()) cfg.sweep_variable = sweep_variable_from_string(variable);
    cfg.validate();

    std::string text;
    if (c_scales->parsed()) text = cmd_scales(cfg);
    else if (c_table->parsed()) text = cmd_table(cfg);
    else if (c_degeneracy->parsed()) text = cmd_degeneracy(cfg);
    else if (c_sweep->parsed()) text = cmd_sweep(cfg);
    else if (c_selection->parsed()) text = cmd_selection(cfg);

    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
      if (!f) throw ConfigError("--out: cannot open '" + out_path + "' for writing");
      f << text;
    }
    return ExitCode::ok;
  } catch (const num::ConvergenceError& e) {
    err << "tlt: numerical failure: " << e.what() << "\n";
    return ExitCode::numerical_failure;
  } catch (const proj::DegenerateSubspaceError& e) {
    err << "tlt: numerical failure: " << e.what() << "\n";
    return ExitCode::numerical_failure;
  } catch (const std::invalid_argument& e) {
    err << "tlt: config error: " << e.what() << "\n";
    return ExitCode::config_error;
  } catch (const std::exception& e) {
    err << "tlt: numerical failure: " << e.what() << "\n";
    return ExitCode::numerical_failure;
  }
}

}  // namespace tlt::cli

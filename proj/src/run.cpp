#include "accelqed/run.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "accelqed/pair.hpp"
#include "accelqed/wall.hpp"

namespace accelqed::cli {

using nlohmann::json;

ConfigError::ConfigError(std::vector<std::string> messages)
    : std::runtime_error([&] {
        std::string joined = "invalid config:";
        for (const auto& m : messages) joined += "\n  - " + m;
        return joined;
      }()),
      messages_(std::move(messages)) {}

namespace {

struct Errors {
  std::vector<std::string> list;
  void add(const std::string& m) { list.push_back(m); }
  void throw_if_any() {
    if (!list.empty()) throw ConfigError(std::move(list));
  }
};

std::vector<double> parse_grid(const json& j, const std::string& key, Errors& err,
                               double min_allowed, bool strict_positive) {
  std::vector<double> out;
  auto check_value = [&](double v) {
    if (!std::isfinite(v) || v < min_allowed || (strict_positive && v <= 0.0)) {
      err.add(key + ": value " + std::to_string(v) + " out of range");
      return false;
    }
    return true;
  };
  if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_number()) {
        err.add(key + ": grid entries must be numbers");
        return {};
      }
      if (!check_value(e.get<double>())) return {};
      out.push_back(e.get<double>());
    }
  } else if (j.is_object()) {
    for (const auto& [k, _] : j.items())
      if (k != "start" && k != "stop" && k != "points" && k != "spacing")
        err.add(key + ": unknown grid key '" + k + "'");
    if (!j.contains("start") || !j.contains("stop") || !j.contains("points")) {
      err.add(key + ": grid object needs start, stop, points");
      return {};
    }
    const double start = j["start"].get<double>();
    const double stop = j["stop"].get<double>();
    const std::int64_t points = j["points"].get<std::int64_t>();
    std::string spacing = j.value("spacing", "lin");
    if (spacing != "lin" && spacing != "log") {
      err.add(key + ": spacing must be 'lin' or 'log'");
      return {};
    }
    if (points < 1) {
      err.add(key + ": points must be >= 1");
      return {};
    }
    if (spacing == "log" && (start <= 0.0 || stop <= 0.0)) {
      err.add(key + ": log spacing requires positive endpoints");
      return {};
    }
    for (std::int64_t i = 0; i < points; ++i) {
      const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
      const double v = spacing == "log"
                           ? start * std::pow(stop / start, f)
                           : start + (stop - start) * f;
      if (!check_value(v)) return {};
      out.push_back(v);
    }
  } else {
    err.add(key + ": must be an array of numbers or a {start, stop, points, spacing} object");
    return {};
  }
  if (out.empty()) err.add(key + ": grid must be non-empty");
  return out;
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& where, Errors& err) {
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed)
      if (k == a) { ok = true; break; }
    if (!ok) err.add(where + ": unknown key '" + k + "'");
  }
}

AtomSource parse_atom_source(const json& j, Errors& err) {
  AtomSource src;
  if (!j.is_object()) {
    err.add("atom: must be an object with 'builtin' or 'dataset'");
    return src;
  }
  check_keys(j, {"builtin", "dataset"}, "atom", err);
  if (j.contains("builtin") == j.contains("dataset")) {
    err.add("atom: exactly one of 'builtin' or 'dataset' required");
    return src;
  }
  if (j.contains("builtin")) {
    src.kind = AtomSource::Kind::builtin;
    src.ref = j["builtin"].get<std::string>();
    if (src.ref != "hydrogen") err.add("atom: unknown builtin '" + src.ref + "'");
  } else {
    src.kind = AtomSource::Kind::dataset;
    src.ref = j["dataset"].get<std::string>();
  }
  return src;
}

PolSource parse_pol_source(const json& j, const std::string& key, Errors& err) {
  PolSource src{PolSource::Builtin{"hydrogen_lorentz"}};
  if (!j.is_object()) {
    err.add(key + ": must be an object");
    return src;
  }
  check_keys(j, {"builtin", "dataset", "lorentz", "static"}, key, err);
  const int given = j.contains("builtin") + j.contains("dataset") +
                    j.contains("lorentz") + j.contains("static");
  if (given != 1) {
    err.add(key + ": exactly one of builtin/dataset/lorentz/static required");
    return src;
  }
  if (j.contains("builtin")) {
    const auto name = j["builtin"].get<std::string>();
    if (name != "hydrogen_lorentz" && name != "hydrogen")
      err.add(key + ": unknown builtin '" + name + "'");
    src.source = PolSource::Builtin{name};
  } else if (j.contains("dataset")) {
    src.source = PolSource::Dataset{j["dataset"].get<std::string>()};
  } else if (j.contains("lorentz")) {
    const auto& l = j["lorentz"];
    check_keys(l, {"alpha0_cm3", "omega0_rad_s"}, key + ".lorentz", err);
    if (!l.contains("alpha0_cm3") || !l.contains("omega0_rad_s")) {
      err.add(key + ".lorentz: needs alpha0_cm3 and omega0_rad_s");
      return src;
    }
    atom::LorentzPol p{l["alpha0_cm3"].get<double>(), l["omega0_rad_s"].get<double>()};
    if (!(p.alpha0 >= 0.0)) err.add(key + ".lorentz.alpha0_cm3: must be >= 0");
    if (!(p.omega0 > 0.0)) err.add(key + ".lorentz.omega0_rad_s: must be > 0");
    src.source = p;
  } else {
    const auto& s = j["static"];
    check_keys(s, {"alpha0_cm3"}, key + ".static", err);
    if (!s.contains("alpha0_cm3")) {
      err.add(key + ".static: needs alpha0_cm3");
      return src;
    }
    atom::StaticPol p{s["alpha0_cm3"].get<double>()};
    if (!(p.alpha0 >= 0.0)) err.add(key + ".static.alpha0_cm3: must be >= 0");
    src.source = p;
  }
  return src;
}

KernelSource parse_kernel_source(const json& j, Errors& err) {
  KernelSource src;
  if (!j.is_object()) {
    err.add("kernel: must be an object");
    return src;
  }
  check_keys(j, {"builtin", "csv", "scale_rad_s"}, "kernel", err);
  if (j.contains("builtin") == j.contains("csv")) {
    err.add("kernel: exactly one of 'builtin' or 'csv' required");
    return src;
  }
  if (j.contains("csv")) {
    src.kind = KernelSource::Kind::csv;
    src.path = j["csv"].get<std::string>();
    if (j.contains("scale_rad_s")) err.add("kernel: scale_rad_s only applies to builtin");
  } else {
    const auto name = j["builtin"].get<std::string>();
    if (name != "test_decaying") {
      err.add("kernel: unknown builtin '" + name + "'");
      return src;
    }
    src.kind = KernelSource::Kind::builtin_test_decaying;
    if (!j.contains("scale_rad_s")) {
      err.add("kernel: builtin test_decaying needs scale_rad_s");
      return src;
    }
    src.scale_rad_s = j["scale_rad_s"].get<double>();
    if (!(src.scale_rad_s > 0.0)) err.add("kernel.scale_rad_s: must be > 0");
  }
  return src;
}

void parse_quad(const json& j, quad::QuadConfig& q, Errors& err) {
  check_keys(j, {"rel_tol", "abs_tol", "max_evaluations", "tail_truncation_threshold"},
             "quad", err);
  if (j.contains("rel_tol")) q.rel_tol = j["rel_tol"].get<double>();
  if (j.contains("abs_tol")) q.abs_tol = j["abs_tol"].get<double>();
  if (j.contains("max_evaluations"))
    q.max_evaluations = j["max_evaluations"].get<std::size_t>();
  if (j.contains("tail_truncation_threshold"))
    q.tail_truncation_threshold = j["tail_truncation_threshold"].get<double>();
  try {
    q.validate();
  } catch (const std::exception& e) {
    err.add(e.what());
  }
}

void parse_cutoff(const json& j, lamb::CutoffPolicy& c, Errors& err) {
  check_keys(j, {"lambda_rad_s", "shape"}, "cutoff", err);
  if (j.contains("lambda_rad_s")) c.lambda = j["lambda_rad_s"].get<double>();
  if (!(c.lambda > 0.0)) err.add("cutoff.lambda_rad_s: must be > 0");
  if (j.contains("shape")) {
    const auto s = j["shape"].get<std::string>();
    if (s == "hard")
      c.shape = lamb::CutoffPolicy::Shape::hard;
    else if (s == "exponential")
      c.shape = lamb::CutoffPolicy::Shape::exponential;
    else
      err.add("cutoff.shape: must be 'hard' or 'exponential'");
  }
}

void parse_output(const json& j, std::optional<OutputSpec>& out, Errors& err) {
  check_keys(j, {"path", "format"}, "output", err);
  OutputSpec spec;
  if (!j.contains("path")) {
    err.add("output: needs 'path'");
    return;
  }
  spec.path = j["path"].get<std::string>();
  if (j.contains("format")) {
    const auto f = j["format"].get<std::string>();
    if (f == "csv")
      spec.format = OutputSpec::Format::csv;
    else if (f == "json")
      spec.format = OutputSpec::Format::json;
    else {
      err.add("output.format: must be 'csv' or 'json'");
      return;
    }
  }
  out = spec;
}

// shortest round-trip decimal, <= 17 significant digits
std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

json grid_to_json(const std::vector<double>& g) {
  json a = json::array();
  for (double v : g) a.push_back(v);
  return a;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("JSON parse error: ") + e.what()});
  }
  if (!j.is_object()) throw ConfigError({"config root must be a JSON object"});

  Errors err;
  RunConfig cfg;
  if (!j.contains("command") || !j["command"].is_string()) {
    err.add("missing string field 'command'");
    err.throw_if_any();
  }
  std::string command = j["command"].get<std::string>();
  json body = j;
  if (command == "sweep") {
    cfg.via_sweep = true;
    if (!j.contains("target") || !j["target"].is_string()) {
      err.add("sweep: missing string field 'target'");
      err.throw_if_any();
    }
    command = j["target"].get<std::string>();
    body.erase("target");
  }
  body.erase("command");
  cfg.command = command;

  std::vector<std::string> allowed = {"output", "quad"};
  if (command == "unruh") {
    allowed.insert(allowed.end(), {"a_cm_s2"});
  } else if (command == "lamb") {
    allowed.insert(allowed.end(), {"atom", "a_cm_s2", "cutoff"});
  } else if (command == "wall") {
    allowed.insert(allowed.end(), {"atom", "kernel", "z0_cm", "a_cm_s2", "cutoff"});
  } else if (command == "pair") {
    allowed.insert(allowed.end(), {"atom_a", "atom_b", "R_cm", "a_cm_s2", "t_s"});
  } else {
    err.add("unknown command '" + command + "'");
    err.throw_if_any();
  }
  check_keys(body, allowed, "config", err);

  if (body.contains("quad")) parse_quad(body["quad"], cfg.quad, err);
  if (body.contains("output")) parse_output(body["output"], cfg.output, err);
  if (body.contains("cutoff")) parse_cutoff(body["cutoff"], cfg.cutoff, err);

  auto need_grid = [&](const char* key, std::vector<double>& dst, double min_allowed,
                       bool strict_positive) {
    if (!body.contains(key)) {
      err.add(std::string(key) + ": required for command '" + command + "'");
      return;
    }
    dst = parse_grid(body[key], key, err, min_allowed, strict_positive);
  };

  if (command == "unruh") {
    need_grid("a_cm_s2", cfg.a_grid, 0.0, false);
  } else if (command == "lamb") {
    if (body.contains("atom"))
      cfg.atom = parse_atom_source(body["atom"], err);
    else
      err.add("atom: required for command 'lamb'");
    need_grid("a_cm_s2", cfg.a_grid, 0.0, false);
  } else if (command == "wall") {
    if (body.contains("atom"))
      cfg.atom = parse_atom_source(body["atom"], err);
    else
      err.add("atom: required for command 'wall'");
    if (body.contains("kernel"))
      cfg.kernel = parse_kernel_source(body["kernel"], err);
    else
      err.add("kernel: required for command 'wall'");
    need_grid("z0_cm", cfg.z0_grid, 0.0, true);
    need_grid("a_cm_s2", cfg.a_grid, 0.0, false);
  } else {  // pair
    if (body.contains("atom_a"))
      cfg.atom_a = parse_pol_source(body["atom_a"], "atom_a", err);
    else
      err.add("atom_a: required for command 'pair'");
    if (body.contains("atom_b"))
      cfg.atom_b = parse_pol_source(body["atom_b"], "atom_b", err);
    else
      err.add("atom_b: required for command 'pair'");
    need_grid("R_cm", cfg.r_grid, 0.0, true);
    need_grid("a_cm_s2", cfg.a_grid, 0.0, false);
    need_grid("t_s", cfg.t_grid, 0.0, false);
  }

  err.throw_if_any();
  return cfg;
}

std::string serialize_config(const RunConfig& c) {
  json j;
  if (c.via_sweep) {
    j["command"] = "sweep";
    j["target"] = c.command;
  } else {
    j["command"] = c.command;
  }
  j["quad"] = {{"rel_tol", c.quad.rel_tol},
               {"abs_tol", c.quad.abs_tol},
               {"max_evaluations", c.quad.max_evaluations},
               {"tail_truncation_threshold", c.quad.tail_truncation_threshold}};
  if (c.output) {
    j["output"] = {{"path", c.output->path},
                   {"format", c.output->format == OutputSpec::Format::csv ? "csv" : "json"}};
  }
  auto shape_name = [](lamb::CutoffPolicy::Shape s) {
    return s == lamb::CutoffPolicy::Shape::hard ? "hard" : "exponential";
  };
  if (c.command == "lamb" || c.command == "wall")
    j["cutoff"] = {{"lambda_rad_s", c.cutoff.lambda}, {"shape", shape_name(c.cutoff.shape)}};
  if (c.atom) {
    j["atom"] = c.atom->kind == AtomSource::Kind::builtin
                    ? json{{"builtin", c.atom->ref}}
                    : json{{"dataset", c.atom->ref}};
  }
  auto pol_to_json = [](const PolSource& p) -> json {
    if (const auto* b = std::get_if<PolSource::Builtin>(&p.source))
      return {{"builtin", b->name}};
    if (const auto* d = std::get_if<PolSource::Dataset>(&p.source))
      return {{"dataset", d->path}};
    if (const auto* l = std::get_if<atom::LorentzPol>(&p.source))
      return {{"lorentz", {{"alpha0_cm3", l->alpha0}, {"omega0_rad_s", l->omega0}}}};
    const auto& s = std::get<atom::StaticPol>(p.source);
    return {{"static", {{"alpha0_cm3", s.alpha0}}}};
  };
  if (c.atom_a) j["atom_a"] = pol_to_json(*c.atom_a);
  if (c.atom_b) j["atom_b"] = pol_to_json(*c.atom_b);
  if (c.kernel) {
    j["kernel"] = c.kernel->kind == KernelSource::Kind::csv
                      ? json{{"csv", c.kernel->path}}
                      : json{{"builtin", "test_decaying"},
                             {"scale_rad_s", c.kernel->scale_rad_s}};
  }
  if (!c.a_grid.empty()) j["a_cm_s2"] = grid_to_json(c.a_grid);
  if (!c.z0_grid.empty()) j["z0_cm"] = grid_to_json(c.z0_grid);
  if (!c.r_grid.empty()) j["R_cm"] = grid_to_json(c.r_grid);
  if (!c.t_grid.empty()) j["t_s"] = grid_to_json(c.t_grid);
  return j.dump();
}

std::string config_hash(const RunConfig& c) {
  RunConfig stripped = c;
  stripped.output.reset();
  const std::string s = serialize_config(stripped);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Cell = std::variant<double, bool, std::string>;

struct Row {
  std::vector<Cell> cells;
  bool converged = true;
};

std::string cell_to_csv(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

json cell_to_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return nullptr;
    return *d;
  }
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

atom::AtomModel resolve_atom(const AtomSource& s) {
  if (s.kind == AtomSource::Kind::builtin) return atom::hydrogen_1s();
  return atom::load_atom_file(s.ref);
}

atom::PolarizabilityModel resolve_pol(const PolSource& s) {
  if (const auto* b = std::get_if<PolSource::Builtin>(&s.source)) {
    if (b->name == "hydrogen_lorentz") return atom::hydrogen_lorentz();
    return atom::PolarizabilityModel{atom::hydrogen_1s()};
  }
  if (const auto* d = std::get_if<PolSource::Dataset>(&s.source))
    return atom::PolarizabilityModel{atom::load_atom_file(d->path)};
  if (const auto* l = std::get_if<atom::LorentzPol>(&s.source))
    return atom::PolarizabilityModel{*l};
  return atom::PolarizabilityModel{std::get<atom::StaticPol>(s.source)};
}

wall::WallKernel resolve_kernel(const KernelSource& s) {
  if (s.kind == KernelSource::Kind::csv) return wall::load_kernel_csv_file(s.path);
  const double scale = s.scale_rad_s;
  wall::WallKernel kern;
  kern.k_max = 1.0;
  kern.evaluator = [scale](double w, double, double) {
    return w / (w + scale) * std::exp(-w / scale);
  };
  return kern;
}

const double kNan = std::numeric_limits<double>::quiet_NaN();

Table evaluate(const RunConfig& c, sweep::Execution exec, int threads) {
  const std::string hash = config_hash(c);
  const std::vector<Cell> meta = {Cell{c.quad.rel_tol}, Cell{std::string(kArtifactVersion)},
                                  Cell{std::string(hash)}};
  const std::vector<std::string> meta_cols = {"rel_tol", "artifact_version", "config_hash"};

  Table tab;
  if (c.command == "unruh") {
    tab.columns = {"a_cm_s2", "T_K", "converged"};
    tab.columns.insert(tab.columns.end(), meta_cols.begin(), meta_cols.end());
    std::function<Row(std::size_t)> fn = [&](std::size_t i) {
      Row r;
      const double a = c.a_grid[i];
      r.cells = {Cell{a}, Cell{core::unruh_temperature(core::Acceleration(a))}, Cell{true}};
      r.cells.insert(r.cells.end(), meta.begin(), meta.end());
      return r;
    };
    tab.rows = sweep::run_grid<Row>(c.a_grid.size(), fn, exec, threads);
  } else if (c.command == "lamb") {
    const auto model = resolve_atom(*c.atom);
    const auto shape = c.cutoff.shape == lamb::CutoffPolicy::Shape::hard
                           ? std::string("hard")
                           : std::string("exponential");
    tab.columns = {"a_cm_s2", "inertial_vf_erg", "thermal_vf_erg",
                   "nonthermal_a2_bose_erg", "nonthermal_a2_cutoff_erg",
                   "total_vf_erg", "rr_erg", "converged",
                   "cutoff_lambda_rad_s", "cutoff_shape"};
    tab.columns.insert(tab.columns.end(), meta_cols.begin(), meta_cols.end());
    std::function<Row(std::size_t)> fn = [&](std::size_t i) {
      Row r;
      const double a = c.a_grid[i];
      double rr = kNan;
      lamb::ShiftBreakdown b;
      bool ok = true;
      try {
        b = lamb::vf_shift(model, core::Acceleration(a), c.cutoff, c.quad);
        ok = b.converged;
        rr = lamb::rr_shift(model, c.cutoff, c.quad);
      } catch (const std::exception&) {
        ok = false;
        b.inertial_vf = b.thermal_vf = kNan;
        b.nonthermal_a2_bose = b.nonthermal_a2_cutoff = kNan;
      }
      r.converged = ok;
      r.cells = {Cell{a}, Cell{b.inertial_vf}, Cell{b.thermal_vf},
                 Cell{b.nonthermal_a2_bose}, Cell{b.nonthermal_a2_cutoff},
                 Cell{b.total_vf()}, Cell{rr}, Cell{ok},
                 Cell{c.cutoff.lambda}, Cell{shape}};
      r.cells.insert(r.cells.end(), meta.begin(), meta.end());
      return r;
    };
    tab.rows = sweep::run_grid<Row>(c.a_grid.size(), fn, exec, threads);
  } else if (c.command == "wall") {
    const auto model = resolve_atom(*c.atom);
    const auto kern = resolve_kernel(*c.kernel);
    const auto shape = c.cutoff.shape == lamb::CutoffPolicy::Shape::hard
                           ? std::string("hard")
                           : std::string("exponential");
    tab.columns = {"z0_cm", "a_cm_s2", "vf_erg", "rr_erg", "total_erg", "converged",
                   "cutoff_lambda_rad_s", "cutoff_shape"};
    tab.columns.insert(tab.columns.end(), meta_cols.begin(), meta_cols.end());
    const std::size_t n = c.z0_grid.size() * c.a_grid.size();
    std::function<Row(std::size_t)> fn = [&](std::size_t i) {
      Row r;
      const double z0 = c.z0_grid[i / c.a_grid.size()];
      const double a = c.a_grid[i % c.a_grid.size()];
      double vf = kNan, rr = kNan, total = kNan;
      bool ok = true;
      try {
        wall::WallConfig wc{z0, a, c.cutoff};
        vf = wall::vf_shift_wall(model, kern, wc, c.quad);
        rr = wall::rr_shift_wall(model, kern, wc, c.quad);
        total = vf + rr;
      } catch (const std::exception&) {
        ok = false;
      }
      r.converged = ok;
      r.cells = {Cell{z0}, Cell{a}, Cell{vf}, Cell{rr}, Cell{total}, Cell{ok},
                 Cell{c.cutoff.lambda}, Cell{shape}};
      r.cells.insert(r.cells.end(), meta.begin(), meta.end());
      return r;
    };
    tab.rows = sweep::run_grid<Row>(n, fn, exec, threads);
  } else {  // pair
    const auto pol_a = resolve_pol(*c.atom_a);
    const auto pol_b = resolve_pol(*c.atom_b);
    tab.columns = {"R_cm", "a_cm_s2", "t_s", "static_erg", "linear_t_erg",
                   "quadratic_t_erg", "total_erg", "relative_correction",
                   "validity_flag", "converged"};
    tab.columns.insert(tab.columns.end(), meta_cols.begin(), meta_cols.end());
    const std::size_t na = c.a_grid.size(), nt = c.t_grid.size();
    const std::size_t n = c.r_grid.size() * na * nt;
    std::function<Row(std::size_t)> fn = [&](std::size_t i) {
      Row r;
      const double R = c.r_grid[i / (na * nt)];
      const double a = c.a_grid[(i / nt) % na];
      const double t = c.t_grid[i % nt];
      pair::InteractionBreakdown b;
      double rel = kNan;
      bool ok = true;
      try {
        pair::PairConfig pc{R, a, t, pol_a, pol_b};
        b = pair::total_interaction(pc, c.quad);
        ok = b.converged;
        rel = b.static_term != 0.0
                  ? std::abs(b.linear_t_term + b.quadratic_t_term) / std::abs(b.static_term)
                  : kNan;
      } catch (const std::exception&) {
        ok = false;
        b = pair::InteractionBreakdown{kNan, kNan, kNan, kNan, false, false};
      }
      r.converged = ok;
      r.cells = {Cell{R}, Cell{a}, Cell{t}, Cell{b.static_term}, Cell{b.linear_t_term},
                 Cell{b.quadratic_t_term}, Cell{b.total}, Cell{rel},
                 Cell{b.validity_flag}, Cell{ok}};
      r.cells.insert(r.cells.end(), meta.begin(), meta.end());
      return r;
    };
    tab.rows = sweep::run_grid<Row>(n, fn, exec, threads);
  }
  return tab;
}

void emit_csv(const Table& tab, std::ostream& os) {
  for (std::size_t i = 0; i < tab.columns.size(); ++i)
    os << (i ? "," : "") << tab.columns[i];
  os << "\n";
  for (const auto& row : tab.rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      os << (i ? "," : "") << cell_to_csv(row.cells[i]);
    os << "\n";
  }
}

void emit_json(const Table& tab, std::ostream& os) {
  json arr = json::array();
  for (const auto& row : tab.rows) {
    json obj;
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      obj[tab.columns[i]] = cell_to_json(row.cells[i]);
    arr.push_back(obj);
  }
  os << arr.dump(2) << "\n";
}

}  // namespace

RunResult run(const RunConfig& config, const std::string& expected_command,
              sweep::Execution exec, int threads) {
  if (!expected_command.empty()) {
    const std::string effective = config.via_sweep ? "sweep" : config.command;
    if (effective != expected_command)
      throw std::runtime_error("config command '" + effective +
                               "' does not match CLI subcommand '" + expected_command + "'");
  }
  // check the output target before doing any physics
  std::ofstream file;
  if (config.output) {
    file.open(config.output->path, std::ios::binary | std::ios::trunc);
    if (!file)
      throw std::runtime_error("cannot open output path: " + config.output->path);
  }
  const Table tab = evaluate(config, exec, threads);
  std::ostringstream buf;
  const auto format = config.output ? config.output->format : OutputSpec::Format::csv;
  if (format == OutputSpec::Format::csv)
    emit_csv(tab, buf);
  else
    emit_json(tab, buf);

  RunResult result;
  if (config.output) {
    file << buf.str();
    file.close();
    if (!file) throw std::runtime_error("failed writing output: " + config.output->path);
    result.files_written.push_back(config.output->path);
  } else {
    std::fwrite(buf.str().data(), 1, buf.str().size(), stdout);
  }
  for (const auto& row : tab.rows)
    if (!row.converged) result.exit_status = 2;
  return result;
}

std::string version_string() {
  return std::string("accel-qed ") + kArtifactVersion + " (constants " + kConstantSetId + ")";
}

}  // namespace accelqed::cli

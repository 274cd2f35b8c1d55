#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "civar/construct.hpp"
#include "civar/errors.hpp"

namespace civar::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string ring_file;
  std::string module_file;
  int steps = 0;
  int degree_cap = 0;
  int max_steps = 0;
  std::size_t max_pairs = 50000;
  int max_degree = 40;
  bool verify = false;
  std::uint64_t seed = 0xC15;
  int attempts = 64;
  std::string format = "text";
  std::vector<std::string> etas;
  std::string a1, a2;
  std::string out_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("io", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RingSpecPtr load_ring(const Config& cfg) {
  Json j;
  try {
    j = Json::parse(read_file(cfg.ring_file));
  } catch (const Json::parse_error& e) {
    throw InputError("syntax", "ring file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw InputError("ring_file", "ring file must be a JSON object");
  std::uint64_t p = 101;
  std::vector<std::string> vars, ci;
  try {
    if (j.contains("p")) p = j.at("p").get<std::uint64_t>();
    vars = j.at("vars").get<std::vector<std::string>>();
    ci = j.at("ci").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw InputError("ring_file", "ring file needs \"vars\" and \"ci\" string lists: " +
                                      std::string(e.what()));
  }
  GbOptions opts;
  opts.max_pairs = cfg.max_pairs;
  opts.max_degree = cfg.max_degree;
  return make_ring_spec(p, vars, ci, opts);
}

ModulePresentation load_module(const Config& cfg, const RingSpecPtr& ring) {
  return parse_module(read_file(cfg.module_file), ring);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

VarietyOptions variety_options(const Config& cfg) {
  VarietyOptions o;
  o.steps = cfg.steps;
  o.degree_cap = cfg.degree_cap;
  o.max_steps = cfg.max_steps;
  return o;
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json scalar_matrix_json(const Matrix& m) {
  const PrimeField& f = m.field();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(f.signed_value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ideal_json(const VarietyIdeal& v) {
  Json j;
  j["generators"] = v.basis_strings();
  j["dimension"] = v.dimension();
  j["trivial"] = v.is_trivial();
  if (v.unit()) j["unit"] = true;
  return j;
}

Json variety_json(const VarietyResult& r) {
  Json j = ideal_json(r.variety);
  j["steps"] = r.steps;
  j["previous_window"] = r.previous.basis_strings();
  j["complexity"] = r.complexity;
  j["stabilized"] = true;
  j["betti"] = r.betti;
  return j;
}

Json module_json(const ModulePresentation& m) {
  Json j;
  j["generators"] = m.num_gens();
  j["relations"] = m.num_relations();
  j["file"] = format_module(m);
  return j;
}

Json ring_json(const RingSpec& r) {
  Json j;
  j["p"] = r.ring->field().characteristic();
  j["vars"] = r.ring->vars();
  std::vector<std::string> ci;
  for (const auto& f : r.ci) ci.push_back(f.to_string());
  j["ci"] = ci;
  j["codim"] = r.codim();
  j["dim"] = r.dim;
  return j;
}

Json betti_table(const Resolution& res) {
  Json steps = Json::array();
  for (int i = 0; i <= res.length(); ++i) {
    Json s;
    s["step"] = i;
    s["rank"] = res.rank(i);
    s["degrees"] = res.degrees(i);
    steps.push_back(std::move(s));
  }
  return steps;
}

void write_out(const Config& cfg, const ModulePresentation& m, Json& report) {
  if (cfg.out_file.empty()) return;
  std::ofstream o(cfg.out_file);
  if (!o) throw InputError("io", "cannot write " + cfg.out_file);
  o << format_module(m);
  report["module_file"] = cfg.out_file;
}

std::vector<Poly> parse_etas(const Config& cfg, const RingSpec& ring) {
  std::vector<Poly> etas;
  for (const auto& e : cfg.etas) etas.push_back(poly_parse(e, ring.h));
  return etas;
}

// Command bodies; each fills the report.

void cmd_validate(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  rep["ring"] = ring_json(*ring);
  if (cfg.module_file.empty()) return;
  ModulePresentation m = load_module(cfg, ring);
  ModulePresentation mp = minimal_presentation(m);
  Json j = module_json(m);
  j["minimal_generators"] = mp.num_gens();
  j["minimal_relations"] = mp.num_relations();
  rep["module"] = j;
}

void cmd_resolve(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  ModulePresentation m = load_module(cfg, ring);
  const int steps = cfg.steps > 0 ? cfg.steps : default_steps(ring->codim());
  Resolution res = resolve_min(m, steps);
  rep["steps"] = steps;
  rep["betti"] = res.betti();
  rep["free_modules"] = betti_table(res);
  Json diffs = Json::array();
  for (int i = 1; i <= res.length(); ++i) {
    Json d;
    d["index"] = i;
    d["matrix"] = matrix_json(res.d(i));
    diffs.push_back(std::move(d));
  }
  rep["differentials"] = diffs;
  if (cfg.verify) {
    bool ok = true;
    for (int i = 1; i < res.length(); ++i) ok = ok && (res.d(i) * res.d(i + 1)).reduced(*ring).is_zero();
    if (!ok) throw VerificationError("complex", "d_i d_{i+1} is not zero");
    rep["complex_verified"] = true;
  }
}

void cmd_operators(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  ModulePresentation m = load_module(cfg, ring);
  const int steps = cfg.steps > 0 ? cfg.steps : default_steps(ring->codim());
  Resolution res = resolve_min(m, steps);
  EisenbudOperators ops = eisenbud_operators(res);
  ExtKModule e = ext_k_module(res, ops);
  rep["steps"] = steps;
  rep["betti"] = res.betti();
  Json levels = Json::array();
  for (int i = 0; i < ops.levels(); ++i) {
    Json level;
    level["from"] = i + 2;
    level["to"] = i;
    Json ts = Json::array();
    for (std::size_t j = 0; j < ring->codim(); ++j) {
      Json t;
      t["operator"] = "chi" + std::to_string(j + 1);
      t["matrix"] = matrix_json(ops.t(i, j));
      t["action_on_E"] = scalar_matrix_json(e.actions[static_cast<std::size_t>(i)][j]);
      ts.push_back(std::move(t));
    }
    level["operators"] = ts;
    levels.push_back(std::move(level));
  }
  rep["operators"] = levels;
  if (cfg.verify) {
    for (int i = 0; i < ops.levels(); ++i) {
      PolyMatrix lhs = res.d(i + 1) * res.d(i + 2);
      for (std::size_t j = 0; j < ring->codim(); ++j)
        lhs = lhs - ops.lifted[static_cast<std::size_t>(i)][j].scaled(ring->ci[j]);
      if (!lhs.is_zero()) throw VerificationError("operator_identity", "operator identity fails");
    }
    rep["operator_identity_verified"] = true;
  }
}

void cmd_variety(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  ModulePresentation m = load_module(cfg, ring);
  rep["variety"] = variety_json(support_variety(m, variety_options(cfg)));
}

void cmd_cut(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  ModulePresentation m = load_module(cfg, ring);
  if (cfg.etas.size() != 1) throw InputError("usage", "cut takes exactly one --eta");
  Poly eta = poly_parse(cfg.etas.front(), ring->h);
  Resolution res(m);
  ExtElement theta = phi(res, eta);
  ModulePresentation k = pushout_cut(res, theta);
  rep["eta"] = eta.to_string();
  rep["ext_degree"] = theta.degree;
  rep["internal_degree"] = theta.internal_degree;
  rep["cocycle"] = matrix_json(theta.t);
  rep["module"] = module_json(k);
  write_out(cfg, k, rep);
  VarietyResult vk = support_variety(k, variety_options(cfg));
  rep["variety"] = variety_json(vk);
  if (cfg.verify) {
    VarietyResult vm = support_variety(m, variety_options(cfg));
    VarietyIdeal expected = variety_intersect(vm.variety, VarietyIdeal(ring->h, {eta}, false, ring->options));
    const bool mcm = is_mcm(m);
    const bool inside = variety_contains(expected, vk.variety);
    const bool equal = inside && variety_contains(vk.variety, expected);
    Json check;
    check["module_variety"] = vm.variety.basis_strings();
    check["expected"] = expected.basis_strings();
    check["mcm"] = mcm;
    check["inclusion"] = inside;
    check["equality"] = equal;
    rep["theorem_check"] = check;
    if (!inside || (mcm && !equal))
      throw VerificationError("cut_variety", "V(K) differs from V(M) cut by V(eta)");
  }
}

void cmd_realize(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  RealizeResult r = realize(ring, parse_etas(cfg, *ring), cfg.verify, variety_options(cfg));
  rep["target"] = r.target.basis_strings();
  rep["module"] = module_json(r.module);
  write_out(cfg, r.module, rep);
  if (r.variety) {
    rep["variety"] = variety_json(*r.variety);
    rep["mcm"] = is_mcm(r.module);
  }
}

void cmd_decompose(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  ModulePresentation m = load_module(cfg, ring);
  DecomposeOptions o;
  o.seed = cfg.seed;
  o.attempts = cfg.attempts;
  std::vector<Summand> parts = decompose(m, o);
  Json list = Json::array();
  for (const auto& p : parts) {
    Json j = module_json(p.module);
    j["dimension"] = p.dim;
    j["possibly_decomposable"] = p.possibly_decomposable;
    if (cfg.verify) j["variety"] = ideal_json(support_variety(p.module, variety_options(cfg)).variety);
    list.push_back(std::move(j));
  }
  rep["summands"] = list;
}

void cmd_check_carlson(const Config& cfg, Json& rep) {
  RingSpecPtr ring = load_ring(cfg);
  ModulePresentation m = load_module(cfg, ring);
  if (cfg.a1.empty() || cfg.a2.empty()) throw InputError("usage", "--a1 and --a2 are required");
  VarietyIdeal a1 = VarietyIdeal::parse(ring->h, split_list(cfg.a1), ring->options);
  VarietyIdeal a2 = VarietyIdeal::parse(ring->h, split_list(cfg.a2), ring->options);
  DecomposeOptions o;
  o.seed = cfg.seed;
  o.attempts = cfg.attempts;
  rep["a1"] = a1.basis_strings();
  rep["a2"] = a2.basis_strings();
  CarlsonReport c = check_carlson(m, a1, a2, variety_options(cfg), o);
  rep["variety"] = variety_json(c.module_variety);
  Json list = Json::array();
  for (const auto& s : c.summands) {
    Json j = module_json(s.summand.module);
    j["dimension"] = s.summand.dim;
    j["possibly_decomposable"] = s.summand.possibly_decomposable;
    j["variety"] = ideal_json(s.variety);
    j["group"] = s.group;
    list.push_back(std::move(j));
  }
  rep["summands"] = list;
  Json g1 = module_json(c.c1), g2 = module_json(c.c2);
  g1["variety"] = ideal_json(c.v1);
  g2["variety"] = ideal_json(c.v2);
  rep["c1"] = g1;
  rep["c2"] = g2;
  rep["verdict"] = c.pass ? "pass" : "fail";
}

// Text rendering mirrors the structured report key by key.
bool is_flat(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void render(const Json& j, std::ostream& out, int indent);

void render_value(const Json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('\n') == std::string::npos) {
      out << " " << s << "\n";
      return;
    }
    out << " |\n";
    std::istringstream lines(s);
    std::string line;
    while (std::getline(lines, line)) out << pad << "  " << line << "\n";
  } else if (v.is_array() && is_flat(v)) {
    out << " [";
    bool first = true;
    for (const auto& e : v) {
      out << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
      first = false;
    }
    out << "]\n";
  } else if (v.is_array()) {
    out << "\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        out << pad << "  -\n";
        render(e, out, indent + 4);
      } else {
        out << pad << "  -";
        render_value(e, out, indent + 2);
      }
    }
  } else if (v.is_object()) {
    out << "\n";
    render(v, out, indent + 2);
  } else {
    out << " " << v.dump() << "\n";
  }
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    out << pad << key << ":";
    render_value(value, out, indent);
  }
}

void emit(const Config& cfg, const Json& rep, std::ostream& out) {
  if (cfg.format == "json")
    out << rep.dump(2) << "\n";
  else
    render(rep, out, 0);
}

void add_common(CLI::App* sub, Config& cfg, bool module) {
  sub->add_option("ring", cfg.ring_file, "Ring file (JSON)")->required();
  if (module) sub->add_option("module", cfg.module_file, "Module file")->required();
  sub->add_option("--steps", cfg.steps, "Resolution steps N")->check(CLI::PositiveNumber);
  sub->add_option("--degree-cap", cfg.degree_cap, "Operator degree cap D")->check(CLI::PositiveNumber);
  sub->add_option("--max-steps", cfg.max_steps, "Largest N tried by the stabilization guard")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-pairs", cfg.max_pairs, "S-pair budget")->check(CLI::PositiveNumber);
  sub->add_option("--max-degree", cfg.max_degree, "Degree budget")->check(CLI::PositiveNumber);
  sub->add_flag("--verify", cfg.verify, "Run theorem checks on the result");
  sub->add_option("--seed", cfg.seed, "Seed for idempotent search");
  sub->add_option("--attempts", cfg.attempts, "Idempotent search attempts")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", cfg.out_file, "Write the resulting module file here");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Support varieties over graded complete intersections", "civar"};
  app.require_subcommand(1);
  using Body = void (*)(const Config&, Json&);
  struct Command {
    const char* name;
    const char* help;
    bool module;
    Body body;
  };
  const Command commands[] = {
      {"validate", "Check a ring file and optionally a module file", false, cmd_validate},
      {"resolve", "Minimal free resolution and Betti numbers", true, cmd_resolve},
      {"operators", "Eisenbud operators and their action on E(M,k)", true, cmd_operators},
      {"variety", "Support variety of a module", true, cmd_variety},
      {"cut", "Pushout module K for one operator polynomial", true, cmd_cut},
      {"realize", "MCM module with a prescribed variety", false, cmd_realize},
      {"decompose", "Split a finite-length module into indecomposables", true, cmd_decompose},
      {"check-carlson", "Decompose along a split of the variety", true, cmd_check_carlson},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "validate") {
      sub->add_option("ring", cfg.ring_file, "Ring file (JSON)")->required();
      sub->add_option("module", cfg.module_file, "Module file");
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    } else {
      add_common(sub, cfg, c.module);
    }
    if (std::string(c.name) == "cut" || std::string(c.name) == "realize")
      sub->add_option("--eta", cfg.etas, "Operator polynomial in chi1..chic (repeatable)");
    if (std::string(c.name) == "check-carlson") {
      sub->add_option("--a1", cfg.a1, "First variety, comma-separated generators")->required();
      sub->add_option("--a2", cfg.a2, "Second variety, comma-separated generators")->required();
    }
    subs.push_back({sub, &c});
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "civar: " << e.what() << "\n";
    Json rep;
    rep["status"] = "error";
    rep["reason"] = "usage";
    rep["message"] = e.what();
    rep["exit_code"] = 1;
    emit(cfg, rep, out);
    return 1;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    Json rep;
    rep["command"] = cmd->name;
    rep["status"] = "ok";
    Json body;
    int code = 0;
    try {
      cmd->body(cfg, body);
      for (auto& [k, v] : body.items()) rep[k] = v;
    } catch (const Error& e) {
      for (auto& [k, v] : body.items()) rep[k] = v;
      rep["status"] = "error";
      rep["reason"] = e.reason();
      rep["message"] = e.what();
      code = e.exit_code();
      err << "civar " << cmd->name << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
      rep["status"] = "error";
      rep["reason"] = "internal_invariant";
      rep["message"] = e.what();
      code = 3;
      err << "civar " << cmd->name << ": " << e.what() << "\n";
    }
    rep["exit_code"] = code;
    emit(cfg, rep, out);
    return code;
  }
  return 1;
}

}  // namespace civar::cli

// hullcodes: build codes from p-ary functions and defining sets, analyze
// them, and run the verification suites.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "hullcodes/error.hpp"
#include "hullcodes/io.hpp"
#include "hullcodes/suites.hpp"

using namespace hc;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kConfig = 2, kGuard = 3 };

struct RunConfig {
  std::string construction;  // first | second
  std::string field;
  std::string fn;
  std::string generator;
  std::string defining_set;
  std::string code_file;
  std::string format = "json";
  std::uint64_t guard = default_guard();
  std::uint64_t seed = 1;
  std::string out;
  bool punctured = false;
  bool dual = false, hull = false, weights = false, cwe = false;
  std::string suite;
};

std::map<std::string, std::string> parse_params(const std::string& s) {
  std::map<std::string, std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      out[item] = "";
    } else {
      out[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return out;
}

std::uint32_t param_u32(const std::map<std::string, std::string>& p, const std::string& key, std::uint32_t def) {
  const auto it = p.find(key);
  if (it == p.end()) return def;
  try {
    return static_cast<std::uint32_t>(std::stoul(it->second));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "parameter " + key + " must be a non-negative integer");
  }
}

FieldPtr need_field(const RunConfig& c) {
  if (c.field.empty()) throw Error(ErrorKind::InvalidArgument, "--field is required");
  return parse_field_spec(c.field);
}

ParyFunction need_function(const RunConfig& c, const FieldPtr& ctx) {
  if (c.fn.empty()) throw Error(ErrorKind::InvalidArgument, "--fn is required");
  return parse_function(ctx, c.fn);
}

std::vector<Elem> power_basis(const FieldCtx& ctx, std::uint32_t k) {
  if (k > ctx.m()) throw Error(ErrorKind::DimensionTooLarge, "k exceeds m");
  std::vector<Elem> d;
  for (std::uint32_t i = 0; i < k; ++i) d.push_back(ctx.pow(ctx.generator(), i));
  return d;
}

/// --generator <name>:<key=value,...>
DefiningSet generate_set(const RunConfig& c) {
  const auto ctx = need_field(c);
  const auto colon = c.generator.find(':');
  const std::string name = c.generator.substr(0, colon);
  const auto p = parse_params(colon == std::string::npos ? "" : c.generator.substr(colon + 1));
  if (name == "skew") return make_skew_set(ctx);
  if (name == "preimage") return make_preimage_set(need_function(c, ctx), ctx->from_int(param_u32(p, "b", 1)));
  if (name == "image") return make_image_set(need_function(c, ctx));
  if (name == "trace-zero") return make_trace_zero_set(ctx);
  if (name == "cyclotomic") return make_cyclotomic_set(ctx, param_u32(p, "a", 1), p.count("second") > 0);
  if (name == "fixed-hull") {
    const auto k = param_u32(p, "k", 1);
    return make_fixed_hull_set(ctx, power_basis(*ctx, k), param_u32(p, "l", 0), ctx->from_int(param_u32(p, "alpha", 2)),
                               ctx->from_int(param_u32(p, "beta", 4)));
  }
  if (name == "lcd") {
    const auto a = param_u32(p, "a", 1);
    const auto k = param_u32(p, "k", 2);
    std::vector<Elem> d;
    for (std::uint32_t i = 0; i < k; ++i) d.push_back(ctx->pow(ctx->generator(), i));
    return make_lcd_set(ctx, a, d);
  }
  if (name == "mds") {
    const auto k = param_u32(p, "k", ctx->m());
    const auto variant = param_u32(p, "extra", 1) == 2 ? MdsVariant::KPlus2 : MdsVariant::KPlus1;
    std::vector<Elem> alphas;
    for (std::uint32_t i = 0; i < k; ++i) alphas.push_back(ctx->from_int(i + 1));
    return make_mds_set(ctx, power_basis(*ctx, k), variant, alphas);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown generator '" + name + "'");
}

DefiningSet load_set(const RunConfig& c) {
  std::ifstream in(c.defining_set);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + c.defining_set);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return defining_set_from_json(j, c.field.empty() ? nullptr : parse_field_spec(c.field));
}

LinearCode build_code(const RunConfig& c) {
  if (!c.code_file.empty()) {
    std::ifstream in(c.code_file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + c.code_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return code_from_json(j.contains("code") ? j.at("code") : j);
  }
  if (c.construction == "first") {
    const auto ctx = need_field(c);
    return first_generic(need_function(c, ctx), !c.punctured);
  }
  if (c.construction == "second") {
    if (!c.defining_set.empty()) return second_generic(load_set(c));
    if (!c.generator.empty()) return second_generic(generate_set(c));
    throw Error(ErrorKind::InvalidArgument, "second construction needs --generator or --defining-set");
  }
  throw Error(ErrorKind::InvalidArgument, "construction must be 'first' or 'second'");
}

json parameters(const LinearCode& c, std::uint64_t guard) {
  json d = nullptr;
  if (c.k() > 0 && codeword_count(c) <= guard) d = min_distance(c, guard);
  return json::array({c.n(), c.k(), d});
}

std::string param_text(const json& p) {
  return "[" + p[0].dump() + "," + p[1].dump() + "," + (p[2].is_null() ? std::string("-") : p[2].dump()) + "]";
}

std::string param_csv(const json& p) {
  return "n,k,d\n" + p[0].dump() + "," + p[1].dump() + "," + (p[2].is_null() ? std::string() : p[2].dump()) + "\n";
}

std::string matrix_text(const LinearCode& c) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < c.k(); ++r) {
    for (Eigen::Index i = 0; i < c.n(); ++i) os << (i ? " " : "") << c.generator()(r, i);
    os << '\n';
  }
  return os.str();
}

std::string cmd_build(const RunConfig& c) {
  const auto code = build_code(c);
  const auto p = parameters(code, c.guard);
  if (c.format == "csv") return param_csv(p);
  if (c.format == "text") return param_text(p) + " code over F_" + std::to_string(code.alphabet().size()) + "\n" + matrix_text(code);
  return json{{"code", code_json(code)}, {"parameters", p}}.dump(2) + "\n";
}

std::string cmd_analyze(const RunConfig& c) {
  const auto code = build_code(c);
  const auto p = parameters(code, c.guard);
  json j{{"parameters", p}};
  std::vector<std::string> csv, text{param_text(p)};
  if (c.dual) {
    const auto d = dual(code);
    const auto dp = parameters(d, c.guard);
    j["dual"] = {{"code", code_json(d)}, {"parameters", dp}};
    csv.push_back("dual_n,dual_k,dual_d\n" + param_csv(dp).substr(6));
    text.push_back("dual " + param_text(dp));
  }
  if (c.hull) {
    const auto h = hull_dim(code);
    j["hull_dim"] = h;
    csv.push_back("hull_dim\n" + std::to_string(h) + "\n");
    text.push_back("hull_dim " + std::to_string(h));
  }
  if (c.weights) {
    const auto w = weight_distribution(code, c.guard);
    j["weights"] = weights_json(w);
    csv.push_back(weights_csv(w));
    std::string t = "weights";
    for (const auto& [wt, n] : w) t += " " + std::to_string(wt) + ":" + std::to_string(n);
    text.push_back(t);
  }
  if (c.cwe) {
    const auto e = complete_weight_enumerator(code, c.guard);
    j["cwe"] = cwe_json(e);
    csv.push_back(cwe_csv(e));
    std::string t = "cwe";
    for (const auto& [comp, n] : e) {
      t += "\n ";
      for (auto x : comp) t += " " + std::to_string(x);
      t += " : " + std::to_string(n);
    }
    text.push_back(t);
  }
  if (c.format == "csv") {
    if (csv.empty()) return param_csv(p);
    std::string out;
    for (std::size_t i = 0; i < csv.size(); ++i) out += (i ? "\n" : "") + csv[i];
    return out;
  }
  if (c.format == "text") {
    std::string out;
    for (const auto& t : text) out += t + "\n";
    return out;
  }
  return j.dump(2) + "\n";
}

std::pair<std::string, bool> cmd_verify(const RunConfig& c) {
  SuiteOptions o;
  o.seed = c.seed;
  o.guard = c.guard;
  if (!c.field.empty()) o.field = c.field;
  if (!c.fn.empty()) o.fn = c.fn;
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + c.suite + "'");
  }
  const auto r = run_suite(c.suite, o);
  std::ostringstream os;
  if (c.format == "json") {
    os << r.to_json().dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "instance,pass,informational\n";
    for (const auto& i : r.instances) {
      std::string name = i.name;
      std::replace(name.begin(), name.end(), ',', ';');
      os << '"' << name << "\"," << (i.pass ? 1 : 0) << ',' << (i.informational ? 1 : 0) << '\n';
    }
  } else {
    for (const auto& i : r.instances)
      os << (i.informational ? "INFO " : i.pass ? "PASS " : "FAIL ") << i.name << '\n';
    os << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.instances.size() << " instances, " << r.failures()
       << " failures)\n";
  }
  return {os.str(), r.pass};
}

void emit(const RunConfig& c, const std::string& s) {
  if (c.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.out);
  f << s;
}

void common_options(CLI::App* app, RunConfig& c) {
  app->add_option("--field", c.field, "field spec, e.g. p=3,m=2 or p=2,m=4,poly=1,1,0,0,1");
  app->add_option("--fn", c.fn, "function, e.g. \"x^2\" or \"tr(w*x^3)\"");
  app->add_option("--format", c.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--guard", c.guard, "enumeration limit in codewords")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "seed for randomized suites");
  app->add_option("--out", c.out, "write output to a file");
}

void code_options(CLI::App* app, RunConfig& c) {
  app->add_option("--generator", c.generator, "defining-set generator <name>:<key=value,...>");
  app->add_option("--defining-set", c.defining_set, "defining set JSON file");
  app->add_flag("--punctured", c.punctured, "first construction over F_q^*");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Linear codes from p-ary functions: construction, duals, hulls and checks"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "build a code and print it with [n,k,d]");
  build->add_option("construction", cfg.construction, "first | second")->required()->check(CLI::IsMember({"first", "second"}));
  common_options(build, cfg);
  code_options(build, cfg);

  auto* analyze = app.add_subcommand("analyze", "dual, hull and weight tables");
  analyze->add_option("construction", cfg.construction, "first | second")->check(CLI::IsMember({"first", "second"}));
  analyze->add_option("--code", cfg.code_file, "code JSON from 'build'");
  common_options(analyze, cfg);
  code_options(analyze, cfg);
  analyze->add_flag("--dual", cfg.dual, "dual code");
  analyze->add_flag("--hull", cfg.hull, "hull dimension");
  analyze->add_flag("--weights", cfg.weights, "weight distribution");
  analyze->add_flag("--cwe", cfg.cwe, "complete weight enumerator");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite name")->required();
  common_options(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (build->parsed()) {
      emit(cfg, cmd_build(cfg));
    } else if (analyze->parsed()) {
      if (cfg.construction.empty() && cfg.code_file.empty()) {
        throw Error(ErrorKind::InvalidArgument, "analyze needs a construction or --code");
      }
      emit(cfg, cmd_analyze(cfg));
    } else {
      const auto [text, pass] = cmd_verify(cfg);
      emit(cfg, text);
      return pass ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::TooLarge ? kGuard : kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}

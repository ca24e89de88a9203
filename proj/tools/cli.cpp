#include "cli.hpp"

#include <cyclo/element.hpp>
#include <cyclo/empirical.hpp>
#include <cyclo/errors.hpp>
#include <cyclo/galois.hpp>
#include <cyclo/json_io.hpp>
#include <cyclo/moments.hpp>
#include <cyclo/trace_metric.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cyclo::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_element_text(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(Errc::invalid_argument, "cannot read element file " + arg.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CycloElement load_element(const CommandConfig& cfg, const std::string& arg) {
  return element_from_json(read_element_text(arg), cfg.p);
}

Json element_json(const CycloElement& a) { return Json::parse(element_to_json(a)); }

Json rational_json(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

std::uint64_t resolve_budget(const CommandConfig& cfg) {
  if (cfg.budget != 0) return cfg.budget;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0)
      throw Error(Errc::invalid_argument, std::string(kBudgetEnv) + " must be a positive integer");
    return value;
  }
  return kDefaultEvaluationBudget;
}

EnumerationOptions enumeration_options(const CommandConfig& cfg) {
  return EnumerationOptions{resolve_budget(cfg), cfg.threads};
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// CSV: one header row, one data row.
void emit_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].first;
  out << '\n';
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second;
  out << '\n';
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

int run_norm(const CommandConfig& cfg, std::ostream& out) {
  const auto a = load_element(cfg, cfg.a);
  Json doc;
  doc["p"] = a.p();
  doc["element"] = element_json(a);
  doc["trace"] = to_string(trace(a));
  doc["trace_vector"] = Json::parse(trace_vector_to_json(trace_vector(a)));
  doc["euclidean_norm_sq"] = to_string(euclidean_norm_sq(a));
  doc["norm_sq"] = to_string(norm_sq(a));
  doc["norm"] = norm(a);
  emit(out, doc);
  return kSuccess;
}

int run_distance(const CommandConfig& cfg, std::ostream& out) {
  const auto a = load_element(cfg, cfg.a);
  const auto b = load_element(cfg, cfg.b);
  Json doc;
  doc["p"] = a.p();
  doc["dist_sq"] = to_string(dist_sq(a, b));
  doc["dist"] = dist(a, b);
  if (cfg.n > 0) {
    const BoxSpec box(cfg.p, cfg.n);
    doc["N"] = cfg.n;
    doc["normalized_diameter"] = normalized_dist(a, b, box, Normalization::diameter);
    doc["normalized_p32"] = normalized_dist(a, b, box, Normalization::p32);
  }
  emit(out, doc);
  return kSuccess;
}

int run_galois(const CommandConfig& cfg, std::ostream& out) {
  const auto a = load_element(cfg, cfg.a);
  const auto profile = subfield_profile(a);
  Json doc;
  doc["p"] = a.p();
  doc["element"] = element_json(a);
  doc["stabilizer"] = profile.stabilizer;
  doc["degree"] = profile.degree;
  Json conj = Json::array();
  for (const auto& c : conjugates(a)) conj.push_back(element_json(c));
  doc["conjugates"] = std::move(conj);
  emit(out, doc);
  return kSuccess;
}

int run_krasner(const CommandConfig& cfg, std::ostream& out) {
  const auto a = load_element(cfg, cfg.a);
  const auto b = load_element(cfg, cfg.b);
  const auto report = krasner_check(a, b);
  Json doc;
  doc["p"] = a.p();
  doc["hypothesis_holds"] = report.hypothesis_holds;
  doc["conclusion_holds"] = report.conclusion_holds;
  doc["dist_sq"] = to_string(report.dist_sq);
  doc["min_conjugate_dist_sq"] = rational_json(report.min_conjugate_dist_sq);
  doc["margin"] = rational_json(report.margin);
  doc["degree_a"] = field_degree(a);
  doc["degree_b"] = field_degree(b);
  emit(out, doc);
  return kSuccess;
}

int run_primitive(const CommandConfig& cfg, std::ostream& out) {
  const auto a = load_element(cfg, cfg.a);
  const auto b = load_element(cfg, cfg.b);
  const auto witness = primitive_element_search(a, b, cfg.max_n);
  Json doc;
  doc["p"] = a.p();
  doc["n"] = witness.n;
  doc["gamma"] = element_json(witness.gamma);
  doc["degree"] = witness.degree;
  emit(out, doc);
  return kSuccess;
}

int run_moments(const CommandConfig& cfg, std::ostream& out) {
  const BoxSpec box(cfg.p, cfg.n);
  const auto report = closed_form_report(box);
  if (cfg.format == "csv") {
    emit_csv(out, {{"p", std::to_string(cfg.p)},
                   {"N", std::to_string(cfg.n)},
                   {"source", "closed_form"},
                   {"m2", to_string(report.m2)},
                   {"m4", to_string(report.m4)},
                   {"mu", to_string(report.mu)},
                   {"r", to_string(report.r_moment)}});
    return kSuccess;
  }
  Json doc;
  doc["p"] = cfg.p;
  doc["N"] = cfg.n;
  doc["source"] = "closed_form";
  doc["m2"] = to_string(report.m2);
  doc["m4"] = to_string(report.m4);
  doc["mu"] = to_string(report.mu);
  doc["r"] = to_string(report.r_moment);
  emit(out, doc);
  return kSuccess;
}

int run_bruteforce(const CommandConfig& cfg, std::ostream& out) {
  const BoxSpec box(cfg.p, cfg.n);
  const auto opts = enumeration_options(cfg);
  Rational brute, closed;
  if (cfg.what == "m2") {
    brute = brute_moment(box, 2, opts);
    closed = m2_closed(box);
  } else if (cfg.what == "m4") {
    brute = brute_moment(box, 4, opts);
    closed = m4_closed(box);
  } else if (cfg.what == "r") {
    brute = brute_r_moment(box, opts);
    closed = r_moment_closed(box);
  } else {
    brute = brute_diameter_sq(box, opts);
    closed = diameter_sq(box);
  }
  if (cfg.format == "csv") {
    emit_csv(out, {{"p", std::to_string(cfg.p)},
                   {"N", std::to_string(cfg.n)},
                   {"what", cfg.what},
                   {"brute_force", to_string(brute)},
                   {"closed_form", to_string(closed)},
                   {"agree", brute == closed ? "true" : "false"}});
    return kSuccess;
  }
  Json doc;
  doc["p"] = cfg.p;
  doc["N"] = cfg.n;
  doc["what"] = cfg.what;
  doc["brute_force"] = to_string(brute);
  doc["closed_form"] = to_string(closed);
  doc["agree"] = brute == closed;
  emit(out, doc);
  return kSuccess;
}

int run_concentrate(const CommandConfig& cfg, std::ostream& out) {
  const BoxSpec box(cfg.p, cfg.n);
  const Rational eps = parse_rational(cfg.eps);
  const bool exhaustive = cfg.mode == "exhaustive";
  const auto report = concentration_experiment(box, eps, exhaustive ? ConcentrationMode::exhaustive
                                                                    : ConcentrationMode::monte_carlo,
                                               cfg.samples, cfg.seed, enumeration_options(cfg));
  const std::string mode = exhaustive ? "exhaustive" : "mc";
  if (cfg.format == "csv") {
    emit_csv(out, {{"p", std::to_string(cfg.p)},
                   {"N", std::to_string(cfg.n)},
                   {"eps", to_string(eps)},
                   {"mode", mode},
                   {"samples", exhaustive ? "" : std::to_string(report.samples)},
                   {"seed", exhaustive ? "" : std::to_string(report.seed)},
                   {"outlier_fraction", to_string(report.outlier_fraction)},
                   {"mean_normsq", format_double(report.mean_normsq)},
                   {"chebyshev_bound", to_string(report.chebyshev_bound)}});
    return kSuccess;
  }
  Json doc;
  doc["p"] = cfg.p;
  doc["N"] = cfg.n;
  doc["eps"] = to_string(eps);
  doc["mode"] = mode;
  doc["samples"] = exhaustive ? Json(nullptr) : Json(report.samples);
  doc["seed"] = exhaustive ? Json(nullptr) : Json(report.seed);
  doc["outliers"] = to_string(report.outliers);
  doc["population"] = to_string(report.population);
  doc["outlier_fraction"] = to_string(report.outlier_fraction);
  doc["outlier_fraction_approx"] = report.outlier_fraction.get_d();
  doc["mean_d2"] = to_string(report.mean_d2);
  doc["mean_normsq"] = report.mean_normsq;
  doc["chebyshev_bound"] = to_string(report.chebyshev_bound);
  doc["chebyshev_bound_approx"] = report.chebyshev_bound.get_d();
  emit(out, doc);
  return kSuccess;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exact arithmetic and distance statistics on the p-th cyclotomic field", "cyclo"};
  app.require_subcommand(1);

  const auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime p")->required();
  };
  const auto add_box = [&](CLI::App* sub) {
    add_p(sub);
    sub->add_option("--n", cfg.n, "box half-width N")->required()->check(CLI::PositiveNumber);
  };
  const auto add_element = [&](CLI::App* sub, const char* name, std::string& target) {
    sub->add_option(name, target, "element as JSON (object or coefficient array), or @file")->required();
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, std::string("max difference vectors (default 1e9, env ") + kBudgetEnv + ")")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads, 0 = all cores");
  };

  auto* norm_cmd = app.add_subcommand("norm", "trace, trace vector and squared norm of an element");
  add_p(norm_cmd);
  add_element(norm_cmd, "--a", cfg.a);

  auto* distance_cmd = app.add_subcommand("distance", "squared distance, distance and normalized distances");
  add_p(distance_cmd);
  add_element(distance_cmd, "--a", cfg.a);
  add_element(distance_cmd, "--b", cfg.b);
  distance_cmd->add_option("--n", cfg.n, "box half-width N; enables normalized distances")->check(CLI::PositiveNumber);

  auto* galois_cmd = app.add_subcommand("galois", "stabilizer, degree and conjugates of an element");
  add_p(galois_cmd);
  add_element(galois_cmd, "--a", cfg.a);

  auto* krasner_cmd = app.add_subcommand("krasner", "check the half-distance containment criterion for a pair");
  add_p(krasner_cmd);
  add_element(krasner_cmd, "--a", cfg.a);
  add_element(krasner_cmd, "--b", cfg.b);

  auto* primitive_cmd = app.add_subcommand("primitive", "find the smallest n with Q(a + b/n) = Q(a, b)");
  add_p(primitive_cmd);
  add_element(primitive_cmd, "--a", cfg.a);
  add_element(primitive_cmd, "--b", cfg.b);
  primitive_cmd->add_option("--max-n", cfg.max_n, "largest n to try")->check(CLI::PositiveNumber);

  auto* moments_cmd = app.add_subcommand("moments", "closed-form moments of distances over B(p,N)");
  add_box(moments_cmd);
  add_format(moments_cmd);

  auto* brute_cmd = app.add_subcommand("bruteforce", "enumerate B(p,N) x B(p,N) and compare with closed forms");
  add_box(brute_cmd);
  brute_cmd->add_option("--what", cfg.what, "quantity to enumerate")
      ->required()
      ->check(CLI::IsMember({"m2", "m4", "r", "diameter"}));
  add_format(brute_cmd);
  add_enumeration(brute_cmd);

  auto* conc_cmd = app.add_subcommand("concentrate", "fraction of pairs whose normalized distance strays from 1/sqrt(6)");
  add_box(conc_cmd);
  conc_cmd->add_option("--eps", cfg.eps, "tolerance as a rational, e.g. 1/20")->required();
  conc_cmd->add_option("--mode", cfg.mode, "exhaustive enumeration or Monte Carlo")
      ->check(CLI::IsMember({"exhaustive", "mc"}));
  conc_cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  conc_cmd->add_option("--seed", cfg.seed, "Monte Carlo seed");
  add_format(conc_cmd);
  add_enumeration(conc_cmd);

  std::vector<const char*> argv{"cyclo"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "norm") return run_norm(cfg, out);
    if (cfg.subcommand == "distance") return run_distance(cfg, out);
    if (cfg.subcommand == "galois") return run_galois(cfg, out);
    if (cfg.subcommand == "krasner") return run_krasner(cfg, out);
    if (cfg.subcommand == "primitive") return run_primitive(cfg, out);
    if (cfg.subcommand == "moments") return run_moments(cfg, out);
    if (cfg.subcommand == "bruteforce") return run_bruteforce(cfg, out);
    if (cfg.subcommand == "concentrate") return run_concentrate(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return (e.code() == Errc::budget_exceeded || e.code() == Errc::search_exhausted) ? kExhausted
                                                                                     : kValidationError;
  }
  err << "error: unknown subcommand " << cfg.subcommand << '\n';
  return kValidationError;
}

}  // namespace cyclo::cli

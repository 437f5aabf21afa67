// Command-line front end: tower setup, series evaluation, convergence
// reports, Gauss-norm queries, correspondence round trips, and the
// lemma-suite runner.
//
// Exit codes: 0 success, 1 failed property check, 2 parse error,
// 3 domain error, 4 validation error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "padic/checks.hpp"
#include "padic/io.hpp"

namespace {

using padic::Json;

struct TowerFlags {
  long long p = 2;
  int e = 1;
  long long u = 1;
  long long prec = 40;

  void attach(CLI::App* cmd, bool need_p) {
    auto* o = cmd->add_option("--p", p, "prime p");
    if (need_p) o->required();
    cmd->add_option("--e", e, "ramification index (pi^e = u*p)");
    cmd->add_option("--u", u, "unit u in pi^e = u*p");
    cmd->add_option("--prec", prec, "working precision in pi-adic digits");
  }
  padic::Tower make() const { return padic::make_tower(p, e, u, prec); }
};

Json tower_json(const padic::Tower& t) {
  return Json{{"p", t.p}, {"e", t.e}, {"u", t.u}, {"prec", t.N}};
}

void emit(const Json& report, const std::string& json_path) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << text;
  }
}

int run_eval(const std::string& kind, const TowerFlags& tf,
             const std::string& literal, const std::string& json_path) {
  padic::Tower t = tf.make();
  padic::Element x = padic::element_from_coeff_list(t, literal);
  Json report{{"command", "eval"}, {"kind", kind}, {"tower", tower_json(t)}};
  report["input"] = padic::element_to_json(x);
  report["valuation_in"] = x.valuation().to_string();
  padic::Element y = padic::Element::zero(t);
  if (kind == "exp")
    y = padic::padic_exp(x);
  else if (kind == "log")
    y = padic::padic_log(x);
  else if (kind == "root")
    y = padic::pth_root_binomial(x);
  else if (kind == "stage1")
    y = padic::exp_extended_stage1(x);
  else
    throw padic::ParseError("eval: unknown kind " + kind +
                            " (expected exp|log|root|stage1)");
  report["output"] = padic::element_to_json(y);
  report["valuation_out"] = y.valuation().to_string();
  report["abs_prec_out"] = y.abs_prec().to_string();
  report["status"] = "ok";
  emit(report, json_path);
  return 0;
}

padic::SeriesKind parse_kind(const std::string& s) {
  if (s == "exp") return padic::SeriesKind::Exp;
  if (s == "log") return padic::SeriesKind::Log;
  if (s == "binom" || s == "root") return padic::SeriesKind::BinomialPthRoot;
  throw padic::ParseError("unknown series kind " + s +
                          " (expected exp|log|binom)");
}

int run_classify(const std::string& kind_s, long long p, int e,
                 const std::string& v_s, const std::string& json_path) {
  padic::SeriesKind kind = parse_kind(kind_s);
  if (!padic::is_prime_ll(p)) throw padic::ParseError("classify: p must be prime");
  auto v = padic::Valuation::parse(v_s);
  if (!v) throw padic::ParseError("classify: bad valuation " + v_s);
  if (!v->is_infinite() && v->finite().den() % e != 0 && e % v->finite().den() != 0)
    throw padic::ParseError("classify: valuation denominator must divide e");
  padic::ConvergenceVerdict verdict = padic::classify(kind, p, *v);
  Json report{{"command", "classify"},
              {"kind", kind_s},
              {"p", p},
              {"e", e},
              {"v", v->to_string()},
              {"verdict", verdict.converges ? "CONVERGES" : "DIVERGES"},
              {"threshold", verdict.threshold.to_string()},
              {"strict", true}};
  Json trace = Json::array();
  for (long long k = 1; k <= 20; ++k)
    trace.push_back(padic::term_valuation(kind, p, k, *v).to_string());
  report["term_valuations"] = trace;
  emit(report, json_path);
  return 0;
}

int run_gauss(const std::string& path, const TowerFlags& tf, bool sample,
              const std::string& json_path) {
  padic::Tower fallback = tf.make();
  padic::RestrictedSeries f =
      padic::series_from_json(padic::json_from_file(path), &fallback);
  Json report{{"command", "gauss"},
              {"tower", tower_json(f.tower())},
              {"nvars", f.nvars()},
              {"terms", static_cast<long long>(f.terms().size())},
              {"gauss_valuation", padic::gauss_norm(f).to_string()}};
  if (sample) {
    if (f.nvars() > 3)
      throw padic::ParseError("gauss --sample: grid sampling limited to nvars <= 3");
    auto grid = padic::sample_grid(padic::default_sample_values(f.tower()), f.nvars());
    report["sup_sample_valuation"] = padic::sup_sample(f, grid).to_string();
    report["points_sampled"] = static_cast<long long>(grid.size());
  }
  emit(report, json_path);
  return 0;
}

int run_weierstrass(const std::string& path, const TowerFlags& tf,
                    const std::string& json_path) {
  Json in = padic::json_from_file(path);
  std::vector<padic::Element> point =
      padic::element_vector_from_json(in.at("point"));
  padic::Tower t = point.empty() ? tf.make() : point.front().tower();
  std::vector<padic::RestrictedSeries> fs;
  for (const auto& fj : in.at("fs"))
    fs.push_back(padic::series_from_json(fj, &t));
  bool member = padic::weierstrass_member(point, fs);
  Json report{{"command", "weierstrass"},
              {"tower", tower_json(t)},
              {"conditions", static_cast<long long>(fs.size())},
              {"member", member}};
  emit(report, json_path);
  return 0;
}

int run_simpson(const std::string& verb, const std::string& config_path,
                const TowerFlags& tf, int g, const std::string& input_path,
                const std::string& json_path) {
  padic::CorrespondenceConfig cfg =
      config_path.empty() ? padic::default_config(tf.make(), g)
                          : padic::config_from_file(config_path);
  padic::Valuation det_val = padic::config_validate(cfg);
  Json in = padic::json_from_file(input_path);
  Json report{{"command", "simpson"},
              {"verb", verb},
              {"tower", tower_json(cfg.tower)},
              {"g", cfg.g},
              {"alpha", cfg.alpha.to_string()},
              {"beta", cfg.beta.to_string()},
              {"det_valuation", det_val.to_string()}};

  auto smallness = [&](const std::vector<bool>& flags) {
    Json arr = Json::array();
    for (bool b : flags) arr.push_back(b);
    return arr;
  };

  if (verb == "forward") {
    auto z = padic::element_vector_from_json(in.at("z"));
    auto theta = padic::element_vector_from_json(in.at("theta"));
    padic::ForwardResult fw = padic::forward(z, theta, cfg);
    report["rho"] = padic::element_vector_to_json(fw.rho);
    report["meets_2beta"] = smallness(fw.meets_2beta);
    report["small"] = fw.small;
  } else if (verb == "inverse") {
    auto rho = padic::element_vector_from_json(in.at("rho"));
    padic::InverseResult bw = padic::inverse(rho, cfg);
    report["z"] = padic::element_vector_to_json(bw.z);
    report["theta"] = padic::element_vector_to_json(bw.theta);
    report["theta_small"] = padic::is_small_higgs(bw.theta, cfg);
  } else if (verb == "roundtrip") {
    auto z = padic::element_vector_from_json(in.at("z"));
    auto theta = padic::element_vector_from_json(in.at("theta"));
    padic::ForwardResult fw = padic::forward(z, theta, cfg);
    padic::InverseResult bw = padic::inverse(fw.rho, cfg);
    padic::Valuation residual = padic::Valuation::infinite();
    for (int i = 0; i < cfg.g; ++i) {
      residual = padic::Valuation::min(
          residual, (bw.z[static_cast<size_t>(i)] - z[static_cast<size_t>(i)]).valuation());
      residual = padic::Valuation::min(
          residual,
          (bw.theta[static_cast<size_t>(i)] - theta[static_cast<size_t>(i)]).valuation());
    }
    report["rho"] = padic::element_vector_to_json(fw.rho);
    report["z"] = padic::element_vector_to_json(bw.z);
    report["theta"] = padic::element_vector_to_json(bw.theta);
    report["residual_valuation"] = residual.to_string();
  } else {
    throw padic::ParseError("simpson: unknown verb " + verb +
                            " (expected forward|inverse|roundtrip)");
  }
  report["status"] = "ok";
  emit(report, json_path);
  return 0;
}

int run_lemma_suite(const padic::CheckOptions& opt, const std::string& json_path) {
  std::vector<padic::CheckResult> results = padic::run_all_checks(opt);
  bool all_pass = true;
  Json checks = Json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    Json cj{{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}};
    if (!r.pass) cj["counterexample"] = r.detail;
    checks.push_back(cj);
  }
  Json report{{"command", "lemma-suite"},
              {"seed", opt.seed},
              {"trials", opt.trials},
              {"prec_digits", opt.prec_digits},
              {"break_isometry", opt.break_isometry},
              {"checks", checks},
              {"all_pass", all_pass}};
  emit(report, json_path);
  return all_pass ? 0 : 1;
}

void emit_error(const std::string& cls, const std::string& msg,
                const std::string& json_path) {
  emit(Json{{"status", "error"}, {"error", Json{{"type", cls}, {"message", msg}}}},
       json_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "p-adic analytic toolkit: ramified towers, series convergence, Gauss "
      "norms, and the rank-one small correspondence"};
  app.require_subcommand(1);
  std::string json_path;
  app.add_option("--json", json_path, "also write the JSON report to PATH");

  auto* eval = app.add_subcommand("eval", "evaluate exp/log/root/stage1 at an element");
  std::string eval_kind, eval_literal;
  TowerFlags eval_tf;
  eval->add_option("kind", eval_kind, "exp|log|root|stage1")->required();
  eval->add_option("element", eval_literal, "coefficient list s*p^v[,s*p^v...]")->required();
  eval_tf.attach(eval, true);

  auto* cls = app.add_subcommand("classify", "convergence verdict from valuation alone");
  std::string cls_kind, cls_v;
  long long cls_p = 2;
  int cls_e = 1;
  cls->add_option("kind", cls_kind, "exp|log|binom")->required();
  cls->add_option("--p", cls_p, "prime p")->required();
  cls->add_option("--e", cls_e, "ramification index");
  cls->add_option("--v", cls_v, "argument valuation m/e")->required();

  auto* gauss = app.add_subcommand("gauss", "Gauss norm of a restricted series");
  std::string gauss_path;
  bool gauss_sample = false;
  TowerFlags gauss_tf;
  gauss->add_option("series", gauss_path, "series literal JSON file")->required();
  gauss->add_flag("--sample", gauss_sample, "also sample the sup-seminorm on the default grid");
  gauss_tf.attach(gauss, false);

  auto* wei = app.add_subcommand("weierstrass", "Weierstrass domain membership");
  std::string wei_path;
  TowerFlags wei_tf;
  wei->add_option("input", wei_path, "JSON file {\"fs\": [...], \"point\": [...]}")->required();
  wei_tf.attach(wei, false);

  auto* simpson = app.add_subcommand("simpson", "rank-one correspondence on points");
  std::string s_verb, s_config, s_input;
  int s_g = 1;
  TowerFlags s_tf;
  simpson->add_option("verb", s_verb, "forward|inverse|roundtrip")->required();
  simpson->add_option("input", s_input, "input JSON file")->required();
  simpson->add_option("--config", s_config, "correspondence config file (key=value)");
  simpson->add_option("--g", s_g, "genus for the default configuration");
  s_tf.attach(simpson, false);

  auto* suite = app.add_subcommand("lemma-suite", "re-verify every property suite");
  padic::CheckOptions opt;
  suite->add_option("--seed", opt.seed, "RNG seed (echoed in the report)");
  suite->add_option("--trials", opt.trials, "random samples per tower and property");
  suite->add_option("--prec", opt.prec_digits, "working precision in p-adic digits");
  suite->add_flag("--break-isometry", opt.break_isometry,
                  "inject an isometry fault (harness self-test)");

  for (auto* sc : {eval, cls, gauss, wei, simpson, suite})
    sc->fallthrough();  // lets --json appear after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) return run_eval(eval_kind, eval_tf, eval_literal, json_path);
    if (*cls) return run_classify(cls_kind, cls_p, cls_e, cls_v, json_path);
    if (*gauss) return run_gauss(gauss_path, gauss_tf, gauss_sample, json_path);
    if (*wei) return run_weierstrass(wei_path, wei_tf, json_path);
    if (*simpson)
      return run_simpson(s_verb, s_config, s_tf, s_g, s_input, json_path);
    if (*suite) return run_lemma_suite(opt, json_path);
  } catch (const padic::ParseError& ex) {
    emit_error("ParseError", ex.what(), json_path);
    return 2;
  } catch (const padic::RootDomainError& ex) {
    emit_error("RootDomainError", ex.what(), json_path);
    return 3;
  } catch (const padic::DomainError& ex) {
    emit_error("DomainError", ex.what(), json_path);
    return 3;
  } catch (const padic::ZeroAtPrecision& ex) {
    emit_error("ZeroAtPrecision", ex.what(), json_path);
    return 3;
  } catch (const padic::OutOfBall& ex) {
    emit_error("OutOfBall", ex.what(), json_path);
    return 3;
  } catch (const padic::SingularConfig& ex) {
    emit_error("SingularConfig", ex.what(), json_path);
    return 4;
  } catch (const padic::SmallnessViolation& ex) {
    emit_error("SmallnessViolation", ex.what(), json_path);
    return 4;
  } catch (const padic::Error& ex) {
    emit_error("Error", ex.what(), json_path);
    return 4;
  }
  return 0;
}

// Command line front end for the maximal-length CA toolkit: characteristic
// polynomials, maximality decisions, Cattell-Muzio synthesis, CA searches,
// phase shifts, cycle structures, complemented variants and bitstreams.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "mlca/complemented.hpp"
#include "mlca/generators.hpp"
#include "mlca/maximality.hpp"
#include "mlca/phaseshift.hpp"
#include "mlca/primitivity.hpp"
#include "mlca/prng.hpp"
#include "mlca/synthesis.hpp"

using json = nlohmann::ordered_json;

namespace {

// exit codes: 0 ok, 2 usage, 3 precondition/domain, 4 factor budget, 5 i/o
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;
constexpr int kExitIo = 5;

struct Options {
  bool json_output = false;
  std::uint32_t q = 2;
  mlca::FactorBudget budget;
};

mlca::FactorBudget budget_from_env() {
  mlca::FactorBudget budget;
  if (const char* v = std::getenv("MLCA_FACTOR_BUDGET")) budget.rho_iterations = std::stoull(v);
  if (const char* v = std::getenv("MLCA_TRIAL_LIMIT")) budget.trial_limit = std::stoull(v);
  return budget;
}

void emit(const Options& opt, const std::string& command, const json& result,
          const std::string& text) {
  if (opt.json_output) {
    json doc;
    doc["schema_version"] = 1;
    doc["status"] = "ok";
    doc["command"] = command;
    doc["result"] = result;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<std::size_t> parse_positions(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(pos, end - pos);
    if (tok.empty()) throw std::invalid_argument("empty entry in position list");
    out.push_back(std::stoul(tok));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

json cycle_json(const mlca::CycleStructure& cs) {
  json entries = json::array();
  for (auto [len, count] : cs.entries) entries.push_back({{"length", len}, {"count", count}});
  return {{"text", cs.to_string()}, {"cycles", entries}, {"transients", cs.transients}};
}

std::string verdict_text(const mlca::MaximalityVerdict& v) {
  std::string s = std::string("maximal ") + (v.maximal ? "yes" : "no") + "\n";
  s += std::string("method ") +
       (v.method == mlca::MaximalityMethod::Exhaustive ? "exhaustive" : "primitivity") + "\n";
  if (v.cycle_length) s += "cycle-length " + std::to_string(*v.cycle_length) + "\n";
  return s;
}

json verdict_json(const mlca::MaximalityVerdict& v) {
  json j;
  j["maximal"] = v.maximal;
  j["method"] = v.method == mlca::MaximalityMethod::Exhaustive ? "exhaustive" : "primitivity";
  if (v.cycle_length) j["cycle_length"] = *v.cycle_length;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"maximal length cellular automata toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global --json after a subcommand
  Options opt;
  opt.budget = budget_from_env();
  app.add_flag("--json", opt.json_output, "machine readable output");

  std::string rules_text, bc_text = "null", poly_text, method = "auto";
  std::string positions_text, seed_text, out_path, format_text = "raw";
  std::size_t pivot = 0, size_n = 0;
  unsigned gamma = 0;
  std::uint64_t steps = 0, attempt_budget = 100000;
  std::optional<std::uint64_t> seed;
  int strategy_no = 0;
  bool use_random = false, use_mincost = false;

  auto add_rules = [&](CLI::App* cmd) {
    cmd->add_option("--rules", rules_text,
                    "rule vector: Wolfram numbers \"90,150,...\" or [[a,d,b],...] with --q")
        ->required();
    cmd->add_option("--q", opt.q, "field modulus (prime), default 2");
  };

  CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a linear CA");
  add_rules(charpoly);
  charpoly->add_option("--bc", bc_text, "boundary: null, periodic or intermediate");

  CLI::App* maximal = app.add_subcommand("maximal", "decide maximality");
  add_rules(maximal);
  maximal->add_option("--method", method, "auto, exhaustive or primitive");

  CLI::App* synth = app.add_subcommand("synth", "90-150 realizations of an irreducible polynomial");
  synth->add_option("--poly", poly_text, "polynomial over GF(2), text or 0x mask")->required();

  CLI::App* search = app.add_subcommand("search", "find maximal length CAs");
  search->add_option("--n", size_n, "number of cells")->required();
  search->add_option("--q", opt.q, "field modulus for --random, default 2");
  search->add_option("--strategy", strategy_no, "greedy strategy 1, 2 or 3");
  search->add_flag("--mincost", use_mincost, "fewest rule 150 cells");
  search->add_flag("--random", use_random, "random search (requires --seed)");
  search->add_option("--seed", seed, "random search seed");
  search->add_option("--budget", attempt_budget, "random search attempt budget");

  CLI::App* phase = app.add_subcommand("phase", "phase shifts of a maximal length CA");
  add_rules(phase);
  phase->add_option("--pivot", pivot, "pivot cell, default 0");

  CLI::App* cycles = app.add_subcommand("cycles", "cycle structure of the transition diagram");
  add_rules(cycles);

  CLI::App* complement = app.add_subcommand("complement", "swap cells to complemented rules");
  add_rules(complement);
  complement->add_option("--positions", positions_text, "cells to complement, e.g. 0,1")->required();

  CLI::App* prng = app.add_subcommand("prng", "write a pseudo-random bitstream");
  add_rules(prng);
  prng->add_option("--seed-config", seed_text, "start configuration, e.g. 1000")->required();
  prng->add_option("--gamma", gamma, "site spacing, default 0");
  prng->add_option("--steps", steps, "number of time steps")->required();
  prng->add_option("--out", out_path, "output file")->required();
  prng->add_option("--format", format_text, "raw or ascii01");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (charpoly->parsed()) {
    mlca::RuleVector rv = mlca::RuleVector::parse(rules_text, opt.q);
    mlca::Boundary bc = mlca::parse_boundary(bc_text);
    mlca::Poly p = mlca::char_poly(rv, bc);
    json j{{"rules", rv.to_string()}, {"boundary", bc_text}, {"polynomial", p.to_string()}};
    if (opt.q == 2) j["hex"] = p.to_hex();
    emit(opt, "charpoly", j, p.to_string() + "\n");
    return 0;
  }

  if (maximal->parsed()) {
    mlca::RuleVector rv = mlca::RuleVector::parse(rules_text, opt.q);
    mlca::MaximalityVerdict v;
    if (method == "exhaustive") {
      v = mlca::decide_maximal_exhaustive(rv);
    } else if (method == "primitive") {
      v = mlca::decide_maximal_primitive(rv, opt.budget);
    } else if (method == "auto") {
      v = rv.is_linear() ? mlca::decide_maximal_primitive(rv, opt.budget)
                         : mlca::decide_maximal_exhaustive(rv);
    } else {
      throw CLI::ValidationError("--method must be auto, exhaustive or primitive");
    }
    emit(opt, "maximal", verdict_json(v), verdict_text(v));
    return 0;
  }

  if (synth->parsed()) {
    mlca::Poly p = mlca::Poly::parse(mlca::gf2(), poly_text);
    mlca::SynthesisResult r = mlca::synthesize(p);
    json j{{"polynomial", p.to_string()},
           {"rules", {r.rules.to_string(), r.reversed.to_string()}},
           {"subpolynomial", r.subpoly.to_string()},
           {"intermediates",
            {{"f", r.intermediates.f.to_string()},
             {"f_inverse", r.intermediates.f_inverse.to_string()},
             {"g", r.intermediates.g.to_string()},
             {"theta", r.intermediates.theta.to_string()},
             {"beta", r.intermediates.beta.to_string()}}}};
    emit(opt, "synth", j, r.rules.to_string() + "\n" + r.reversed.to_string() + "\n");
    return 0;
  }

  if (search->parsed()) {
    if (int(use_mincost) + int(use_random) + int(strategy_no != 0) != 1)
      throw CLI::ValidationError("choose exactly one of --strategy, --mincost, --random");
    if (use_mincost) {
      mlca::RuleVector rv = mlca::minimal_cost_search(size_n, opt.budget);
      json j{{"rules", rv.to_string()}, {"cost", mlca::ca_cost(rv)}};
      emit(opt, "search", j, rv.to_string() + "\n");
      return 0;
    }
    if (use_random) {
      if (!seed) throw CLI::ValidationError("--random requires an explicit --seed");
      auto hit = mlca::random_search_gfq(size_n, opt.q, attempt_budget, *seed, opt.budget);
      if (!hit) {
        emit(opt, "search", json{{"found", false}, {"attempts", attempt_budget}},
             "no maximal length CA found within the budget\n");
        return kExitDomain;
      }
      json j{{"found", true}, {"rules", hit->rules.to_string()}, {"attempts", hit->attempts}};
      emit(opt, "search", j, hit->rules.to_string() + "\n");
      return 0;
    }
    auto rv = mlca::strategy(size_n, strategy_no);
    if (!rv) {
      emit(opt, "search", json{{"found", false}, {"strategy", strategy_no}},
           "strategy " + std::to_string(strategy_no) + " does not apply to n=" +
               std::to_string(size_n) + "\n");
      return kExitDomain;
    }
    json j{{"found", true}, {"strategy", strategy_no}, {"rules", rv->to_string()}};
    emit(opt, "search", j, rv->to_string() + "\n");
    return 0;
  }

  if (phase->parsed()) {
    mlca::RuleVector rv = mlca::RuleVector::parse(rules_text, opt.q);
    mlca::PhaseShiftReport rep = mlca::phase_shifts(rv, pivot);
    std::string text = "pivot " + std::to_string(rep.pivot) + "\n";
    for (std::size_t i = 0; i < rep.shifts.size(); ++i)
      text += "cell " + std::to_string(i) + " shift " + std::to_string(rep.shifts[i]) + "\n";
    emit(opt, "phase", json{{"pivot", rep.pivot}, {"shifts", rep.shifts}}, text);
    return 0;
  }

  if (cycles->parsed()) {
    mlca::RuleVector rv = mlca::RuleVector::parse(rules_text, opt.q);
    mlca::CycleStructure cs = mlca::cycle_structure(rv);
    std::string text = cs.to_string() + "\n";
    if (cs.transients) text += "transients " + std::to_string(cs.transients) + "\n";
    emit(opt, "cycles", cycle_json(cs), text);
    return 0;
  }

  if (complement->parsed()) {
    mlca::RuleVector rv = mlca::RuleVector::parse(rules_text, opt.q);
    mlca::RuleVector comp = mlca::complementize(rv, parse_positions(positions_text));
    mlca::MaximalityVerdict v = mlca::decide_maximal_exhaustive(comp);
    auto fixed = mlca::complemented_fixed_point(comp);
    std::string text = comp.to_string() + "\n" + verdict_text(v);
    json j{{"rules", comp.to_string()}, {"verdict", verdict_json(v)}};
    if (fixed) {
      text += "fixed-point " + fixed->to_string() + "\n";
      j["fixed_point"] = fixed->to_string();
    }
    emit(opt, "complement", j, text);
    return 0;
  }

  if (prng->parsed()) {
    mlca::RuleVector rv = mlca::RuleVector::parse(rules_text, opt.q);
    mlca::Configuration seed_config = mlca::Configuration::parse(seed_text, rv.field());
    mlca::BitFormat format;
    if (format_text == "raw") {
      format = mlca::BitFormat::Raw;
    } else if (format_text == "ascii01") {
      format = mlca::BitFormat::Ascii01;
    } else {
      throw CLI::ValidationError("--format must be raw or ascii01");
    }
    mlca::StreamSpec spec =
        mlca::StreamSpec::make(rv, seed_config, gamma, mlca::MaximalityOptions{}, opt.budget);
    std::uint64_t written = mlca::export_stream(spec, steps, out_path, format);
    std::uint64_t bits = steps * spec.sample_sites().size();
    json j{{"path", out_path},     {"sidecar", out_path + ".json"}, {"bytes_written", written},
           {"bits", bits},         {"gamma", gamma},                {"steps", steps},
           {"format", format_text}};
    emit(opt, "prng", j,
         "wrote " + std::to_string(written) + " bytes (" + std::to_string(bits) + " bits) to " +
             out_path + "\n");
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mlca::FactorBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

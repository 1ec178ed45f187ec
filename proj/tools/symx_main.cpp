#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symx/sexpr.hpp"
#include "symx/suites.hpp"

namespace {

using namespace symx;

TruncatedPoset poset_of(std::uint64_t coords, std::uint32_t slots) {
  TruncatedPoset t;
  for (std::uint64_t i = 0; i < coords; ++i)
    t.domain.push_back(OrderPoint::nat(i));
  t.slots = slots;
  return t;
}

std::string points_to_string(const PointSet& pts) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : pts) {
    if (!first) out += ", ";
    out += point_to_string(p);
    first = false;
  }
  return out + "}";
}

int run_eval(const std::string& action, std::vector<std::string> args,
             const std::string& in_file, std::uint64_t index_size,
             std::uint32_t slots, const std::string& format) {
  if (!in_file.empty()) {
    std::ifstream f(in_file);
    if (!f) {
      std::cerr << "cannot open " << in_file << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(f, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        args.push_back(line);
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw ParseError("eval " + action + " takes " + std::to_string(n) +
                       " expression(s), got " + std::to_string(args.size()));
  };
  std::string result;
  if (action == "apply") {
    need(2);
    auto pi = parse_automorphism_str(args[0]);
    result = name_to_string(apply_name(pi, parse_name_str(args[1])));
  } else if (action == "support") {
    need(1);
    result = points_to_string(support_points(parse_name_str(args[0])));
  } else if (action == "compile") {
    need(1);
    ForcingEngine eng(poset_of(index_size, slots));
    result = name_to_string(eng.compile(parse_name_str(args[0])));
  } else if (action == "force") {
    need(2);
    ForcingEngine eng(poset_of(index_size, slots));
    auto p = parse_condition_str(args[0]);
    auto phi = parse_formula(parse_sexpr(args[1]));
    result = eng.forces(p, phi) ? "true" : "false";
  } else {
    std::cerr << "unknown eval action '" << action
              << "' (expected apply|support|compile|force)\n";
    return 2;
  }
  if (format == "json") {
    nlohmann::json j;
    j["action"] = action;
    j["result"] = result;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << result << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symx: symbolic workbench for name calculus and symmetric extensions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string action;
  std::vector<std::string> eval_args;
  std::string in_file;

  auto* run = app.add_subcommand("run", "run an acceptance suite");
  run->add_option("suite", cfg.suite, "suite id")->required();
  run->add_option("--index-size", cfg.index_size, "poset coordinates / domain size");
  run->add_option("--slots", cfg.slots, "slots per coordinate");
  run->add_option("--depth", cfg.depth, "name enumeration depth");
  run->add_option("--cases", cfg.cases, "randomized case count");
  run->add_option("--seed", cfg.seed, "RNG seed");
  run->add_option("--budget", cfg.budget, "enumeration budget");
  run->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* ev = app.add_subcommand("eval", "one-shot evaluation of s-expressions");
  ev->add_option("action", action, "apply|support|compile|force")->required();
  ev->add_option("args", eval_args, "s-expression arguments");
  ev->add_option("--in", in_file, "file with one s-expression per line");
  ev->add_option("--index-size", cfg.index_size, "poset coordinates");
  ev->add_option("--slots", cfg.slots, "slots per coordinate");
  ev->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      auto r = run_suite(cfg);
      std::cout << (cfg.format == "json" ? report_to_json(r) : report_to_text(r))
                << "\n";
      return r.pass ? 0 : 1;
    }
    return run_eval(action, eval_args, in_file, cfg.index_size, cfg.slots,
                    cfg.format);
  } catch (const symx::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const symx::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const symx::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "apostol/campaign.hpp"
#include "apostol/families.hpp"
#include "apostol/render.hpp"

namespace {

using namespace apostol;

struct CommonArgs {
  std::string lambda = "1";
  std::string mu = "0";
  int n = 0;
  std::string format = "text";
};

void add_family_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--lambda", args.lambda, "lambda as p or p/q")->capture_default_str();
  cmd->add_option("--mu", args.mu, "mu as p or p/q")->capture_default_str();
  cmd->add_option("--format", args.format, "text, json, csv or latex")->capture_default_str();
}

Params make_params(const CommonArgs& args) {
  return Params(parse_rational(args.lambda), parse_rational(args.mu));
}

std::vector<std::string> split_ids(const std::string& spec) {
  std::vector<std::string> ids;
  std::string current;
  for (char c : spec) {
    if (c == ',') {
      if (!current.empty()) ids.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) ids.push_back(current);
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation and verification of the unified Apostol-type "
      "Bernoulli-Euler polynomial family V_n(x; lambda; mu)"};
  app.require_subcommand(1);

  CommonArgs numbers_args;
  auto* numbers = app.add_subcommand("numbers", "Print V_0..V_n(lambda;mu) exactly");
  add_family_flags(numbers, numbers_args);
  numbers->add_option("--n", numbers_args.n, "highest index")->required();

  CommonArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print the polynomial V_n(x; lambda; mu)");
  add_family_flags(poly, poly_args);
  poly->add_option("--n", poly_args.n, "degree index")->required();

  CommonArgs eval_args;
  std::string eval_x = "0";
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate V_n(x; lambda; mu) at a rational x");
  add_family_flags(eval_cmd, eval_args);
  eval_cmd->add_option("--n", eval_args.n, "degree index")->required();
  eval_cmd->add_option("--x", eval_x, "evaluation point as p or p/q")->capture_default_str();

  CommonArgs table_args;
  auto* table = app.add_subcommand("table", "Print the table of V_0..V_n(x; lambda; mu)");
  add_family_flags(table, table_args);
  table->add_option("--n", table_args.n, "highest degree")->required();

  auto* verify = app.add_subcommand("verify", "Run a seeded exact verification campaign");
  std::uint64_t seed = 0;
  int instances = 10;
  int max_n = 16;
  int order = 64;
  std::string ids_spec = "all";
  std::string verify_format = "text";
  bool serial = false;
  verify->add_option("--seed", seed, "campaign seed")->capture_default_str();
  verify->add_option("--instances", instances, "sampled instances per identity")
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "highest sampled degree")->capture_default_str();
  verify->add_option("--order", order, "series truncation order")->capture_default_str();
  verify->add_option("--identities", ids_spec, "comma-separated identity ids, or all")
      ->capture_default_str();
  verify->add_option("--format", verify_format, "text, json, csv or latex")
      ->capture_default_str();
  verify->add_flag("--serial", serial, "run the serial reference path instead of OpenMP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (numbers->parsed()) {
      const auto values = unified_numbers(make_params(numbers_args), numbers_args.n);
      std::cout << render_numbers(values, parse_format(numbers_args.format)) << "\n";
    } else if (poly->parsed()) {
      const Poly q = unified_poly(make_params(poly_args), poly_args.n);
      std::cout << render_poly(q, parse_format(poly_args.format)) << "\n";
    } else if (eval_cmd->parsed()) {
      const Poly q = unified_poly(make_params(eval_args), eval_args.n);
      const Rational value = eval(q, parse_rational(eval_x));
      std::cout << render_rational(value, parse_format(eval_args.format)) << "\n";
    } else if (table->parsed()) {
      const auto polys = unified_polys(make_params(table_args), table_args.n);
      std::cout << render_table(polys, parse_format(table_args.format));
    } else if (verify->parsed()) {
      CampaignConfig config;
      config.seed = seed;
      config.instances_per_identity = instances;
      config.max_n = max_n;
      config.order = order;
      config.identities = split_ids(ids_spec);
      config.output = parse_format(verify_format);
      validate(config);
      const CampaignResult result =
          run_campaign(config, serial ? RunMode::Serial : RunMode::Parallel);
      std::cout << render_reports(result.reports, config.output);
      for (const std::string& line : result.summary.lines) std::cerr << line << "\n";
      return result.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}

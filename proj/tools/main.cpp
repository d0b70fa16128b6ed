#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using boxideal::cli::RunConfig;

namespace {

void common_options(CLI::App* sub, RunConfig& c, std::string& format, std::string& out) {
  sub->add_option("--seed", c.seed, "Seed for every random stream")->capture_default_str();
  sub->add_option("--budget-spairs", c.budget_spairs, "Maximum S-polynomials reduced per Groebner run")
      ->envname("BOXIDEAL_BUDGET_SPAIRS")
      ->capture_default_str();
  sub->add_option("--max-terms", c.max_terms, "Maximum terms in an intermediate polynomial")
      ->envname("BOXIDEAL_MAX_TERMS")
      ->capture_default_str();
  sub->add_option("--max-degree", c.max_degree, "Highest degree sampled when fitting Hilbert polynomials")
      ->envname("BOXIDEAL_MAX_DEGREE")
      ->capture_default_str();
  sub->add_option("--gate-positions", c.gate_positions, "Position limit for elimination-based checks")
      ->envname("BOXIDEAL_GATE_POSITIONS");
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  sub->add_option("--out", out, "Write the report to this file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tools for ideals of 2x2 minors of box-shaped matrices"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "json";
  std::string out;

  auto* minors = app.add_subcommand("minors", "Emit the deduplicated 2x2 minors of a generic box");
  minors->add_option("box", c.target, "Box spec such as 2x3x4")->required();

  auto* gb = app.add_subcommand("gb-verify", "Check that the minors form a Groebner basis");
  gb->add_option("box", c.target, "Box spec")->required();
  gb->add_flag("--mutate", c.mutate, "Corrupt one generator (test mode)");

  auto* hilbert = app.add_subcommand("hilbert", "Compare the Hilbert function formula with enumeration");
  hilbert->add_option("box", c.target, "Box spec")->required();
  hilbert->add_option("--tmax", c.tmax, "Largest degree tabulated")->capture_default_str();

  auto* kernel = app.add_subcommand("segre-kernel", "Compare the eliminated Segre kernel with the minor ideal");
  kernel->add_option("box", c.target, "Box spec")->required();

  auto* decompose = app.add_subcommand("decompose", "Decide decomposability of a tensor given as JSON");
  decompose->add_option("tensor", c.target, "Tensor JSON file")->required();

  auto* blowup = app.add_subcommand("blowup", "Build and verify the defining ideal of a blown-up plane");
  blowup->add_option("--d", c.d, "Points are C(d+1,2) generic points")->capture_default_str();
  blowup->add_option("--n", c.n, "Embedding degree t = d + n")->capture_default_str();

  for (auto* sub : {minors, gb, hilbert, kernel, decompose, blowup})
    common_options(sub, c, format, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : boxideal::cli::exit_input;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.json = format == "json";

  const auto result = boxideal::cli::run_command(c);
  if (out.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write '" << out << "'\n";
      return boxideal::cli::exit_input;
    }
    file << result.output;
  }
  return result.exit_code;
}

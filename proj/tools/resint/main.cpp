#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "resint/errors.hpp"

using namespace resint;
using namespace resint::cli;

int main(int argc, char** argv) {
  CLI::App app{"resint: residual intersections and limits of Fano schemes"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  RunConfig config;
  std::string format = "table";
  std::string output;
  bool selftest = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", output, "Write the report to a file instead of stdout");
  app.add_flag("--selftest", selftest, "Run the golden suite and print a digest");

  auto grass_options = [&](CLI::App* sub) {
    sub->add_option("--r", config.r, "Dimension of the linear subspaces")->required();
    sub->add_option("--n", config.n, "Dimension of the ambient projective space")->required();
  };
  std::string pair;
  auto pairing_option = [&](CLI::App* sub) {
    sub->add_option("--pair", pair, "Schubert class to pair positive-dimensional classes with, e.g. 2,1");
  };

  auto* fano = app.add_subcommand("fano", "Class and degree of the Fano scheme of a generic hypersurface");
  grass_options(fano);
  fano->add_option("--d", config.d, "Degree of the hypersurface")->required();
  pairing_option(fano);

  auto* degenerate = app.add_subcommand("degenerate", "Distribution of limiting subspaces over X_k^e + X_l^f");
  grass_options(degenerate);
  degenerate->add_option("--d", config.d, "Degree of the hypersurface")->required();
  std::vector<std::string> pieces;
  degenerate->add_option("--piece", pieces, "Piece as KxE (degree x multiplicity); give two");
  degenerate->add_flag("--all", config.all, "Every splitting of d into two pieces");
  degenerate->add_flag("--non-reduced", config.non_reduced_only, "With --all, skip splittings with e = f = 1");
  degenerate->add_flag("--classes", config.show_classes, "Always list the classes in tables");
  pairing_option(degenerate);

  auto* verify = app.add_subcommand("verify", "Check the Chern/Segre identity grid on a Grassmannian");
  grass_options(verify);
  verify->add_option("--dmax", config.dmax, "Largest k + l")->capture_default_str();
  std::string fault;
  verify->add_option("--inject-fault", fault, "Corrupt the right-hand side to test the checker")
      ->check(CLI::IsMember({"binomial", "cancellation"}));

  auto* decompose = app.add_subcommand("decompose", "Residual decomposition from supplied ring data");
  std::string ring_file;
  std::string input_file;
  decompose->add_option("--ring", ring_file, "Ring definition file")->check(CLI::ExistingFile);
  decompose->add_option("--input", input_file, "Decomposition input file")->required()->check(CLI::ExistingFile);
  decompose->add_flag("--standard", config.standard, "Use the standard main-term split instead");

  CLI11_PARSE(app, argc, argv);

  try {
    config.format = parse_format(format);
    config.threads = threads_from_env();
    if (selftest) {
      config.subcommand = "selftest";
    } else if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    } else {
      config.subcommand = app.get_subcommands().front()->get_name();
    }
    for (const auto& p : pieces) config.pieces.push_back(Piece::parse(p));
    if (!pair.empty()) config.pairing = Partition::parse(pair);
    if (fault == "binomial") config.fault = Mutation::shifted_binomial;
    if (fault == "cancellation") config.fault = Mutation::dropped_cancellation;
    if (!ring_file.empty()) config.ring_file = ring_file;
    if (!input_file.empty()) config.input_file = input_file;

    const CommandResult result = run_config(config);
    if (output.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(output);
      if (!out) throw ValidationError("cannot write '" + output + "'");
      out << result.output;
    }
    if (result.exit_code != 0) {
      std::cerr << "resint: internal check failed (see report)\n";
    }
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "resint: " << e.what() << "\n";
    return 2;
  }
}

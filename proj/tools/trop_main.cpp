#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trop/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const trop::CommandResult& result, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << result.output;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical implicitization toolkit: tropical varieties, Newton and Chow "
               "polytopes, and implicit equations from Newton polytope data"};
  app.require_subcommand(1);

  std::string input_path, output_path;
  trop::CommandOptions opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "problem file (JSON)")->required();
    sub->add_option("--output", output_path, "write the result here instead of stdout");
    sub->add_option("--seed", opts.seed, "seed for all randomized choices");
    return sub;
  };

  auto* tropicalize = add_common(app.add_subcommand(
      "tropicalize", "enumerate the maximal cone pairs of the tropical variety"));
  auto* newton = add_common(
      app.add_subcommand("newton", "reconstruct the Newton polytope of the implicit equation"));
  auto* chow = add_common(app.add_subcommand("chow", "Chow polytope vertices and degree"));
  auto* implicitize =
      add_common(app.add_subcommand("implicitize", "recover the implicit equation numerically"));
  implicitize->add_option("--samples", opts.samples, "sample count (default: 2x support size)");
  implicitize->add_option("--tol", opts.tol, "relative nullity threshold");
  auto* graph = add_common(
      app.add_subcommand("graph", "embedded surface graph of a two-dimensional tropical cycle"));
  graph->add_option("--format", opts.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  auto* oracle = add_common(
      app.add_subcommand("oracle-curve", "exact Sylvester resultant for plane curves (d = 1)"));

  CLI11_PARSE(app, argc, argv);

  std::string input;
  try {
    input = read_file(input_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  trop::CommandResult result;
  if (tropicalize->parsed()) result = trop::cmd_tropicalize(input, opts);
  if (newton->parsed()) result = trop::cmd_newton(input, opts);
  if (chow->parsed()) result = trop::cmd_chow(input, opts);
  if (implicitize->parsed()) result = trop::cmd_implicitize(input, opts);
  if (graph->parsed()) result = trop::cmd_graph(input, opts);
  if (oracle->parsed()) result = trop::cmd_oracle_curve(input, opts);

  try {
    emit(result, output_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return result.exit_code;
}

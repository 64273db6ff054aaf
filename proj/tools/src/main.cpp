#include <iostream>

#include <CLI11.hpp>

#include "run.hpp"

int main(int argc, char** argv) {
  using namespace htoric::cli;
  CLI::App app{"htoric: exact orbifold Chow rings of hypertoric and Lawrence toric stacks"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  const char* commands[][2] = {
      {"analyze", "Stability data, coordinates and tangent class"},
      {"inertia", "Inertia components with ages"},
      {"chowring", "Chow ring presentation and graded groups up to D"},
      {"orbifold-table", "Orbifold product structure constants"},
      {"verify", "Obstruction pullback, orbifold isomorphism and product laws"},
      {"chart-check", "Exact roundtrips through the local product charts"},
      {"sre-check", "Strong regular embedding criterion on stabilizer data"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", config.input, "Model JSON file")->required();
    sub->add_option("--degree,-D", config.degree, "Truncation degree D")->capture_default_str();
    sub->add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
    sub->add_option("--samples", config.samples, "Sample points per chart")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    write_error(std::cout, format == "text" ? Format::Text : Format::Json, "usage", e.what());
    return kInputError;
  }

  config.format = format == "text" ? Format::Text : Format::Json;
  config.command = *parse_command(app.get_subcommands().front()->get_name());
  return run(config, std::cout, std::cerr);
}

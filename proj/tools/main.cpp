#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sectorstab/commands.hpp"

namespace {

const std::map<std::string, sectorstab::OutputFormat> kFormats = {
    {"text", sectorstab::OutputFormat::Text},
    {"machine", sectorstab::OutputFormat::Machine},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sector stability of interval polynomials via critical vertices"};
  app.require_subcommand(1);

  int p = 0;
  int q = 0;
  int degree = 0;
  std::string spec_path;
  std::string out_path;
  std::optional<long long> samples;
  std::optional<std::uint64_t> seed;
  sectorstab::OutputFormat format = sectorstab::OutputFormat::Text;

  auto* vertices = app.add_subcommand("vertices", "Print the critical sign patterns");
  vertices->add_option("--p", p, "sector numerator")->required();
  vertices->add_option("--q", q, "sector denominator")->required();
  vertices->add_option("--degree", degree, "polynomial degree")->required();
  vertices->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* check = app.add_subcommand("check", "Decide family stability from a spec file");
  check->add_option("spec", spec_path, "spec file path")->required();
  check->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify", "Cross-check the verdict against oracles");
  verify->add_option("spec", spec_path, "spec file path")->required();
  verify->add_option("--samples", samples, "Monte Carlo sample count");
  verify->add_option("--seed", seed, "Monte Carlo seed");
  verify->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* roots = app.add_subcommand("roots", "Write per-vertex root/boundary table as CSV");
  roots->add_option("spec", spec_path, "spec file path")->required();
  roots->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sectorstab::kExitInputError;
  }

  if (vertices->parsed()) {
    return sectorstab::cmd_vertices(p, q, degree, format, std::cout, std::cerr);
  }
  if (check->parsed()) {
    return sectorstab::cmd_check(spec_path, format, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return sectorstab::cmd_verify(spec_path, samples, seed, format, std::cout, std::cerr);
  }
  return sectorstab::cmd_roots(spec_path, out_path, std::cout, std::cerr);
}

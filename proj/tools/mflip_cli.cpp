#include <cstdint>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mflip/checks.hpp"
#include "mflip/errors.hpp"
#include "mflip/families.hpp"
#include "mflip/state_io.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Angles are accepted either as plain floating-point radians or as pi
// fractions: [sign][factor][*]pi[/divisor], e.g. "pi/3", "0.5pi", "2*pi/3".
double parse_angle(const std::string& text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?)\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)",
      std::regex::icase);
  try {
    std::smatch match;
    if (std::regex_match(text, match, pi_form)) {
      const double sign = match[1].str() == "-" ? -1.0 : 1.0;
      const std::string factor_text = match[2].str();
      const double factor =
          (factor_text.empty() || factor_text == ".") ? 1.0
                                                      : std::stod(factor_text);
      const double divisor =
          match[3].str().empty() ? 1.0 : std::stod(match[3].str());
      if (divisor == 0.0)
        throw mflip::invalid_input("angle '" + text + "': zero divisor");
      return sign * factor * kPi / divisor;
    }
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    while (consumed < text.size() &&
           std::isspace(static_cast<unsigned char>(text[consumed])))
      ++consumed;
    if (consumed != text.size())
      throw mflip::invalid_input("trailing characters in angle '" + text + "'");
    return value;
  } catch (const mflip::invalid_input&) {
    throw;
  } catch (const std::exception&) {
    throw mflip::invalid_input(
        "cannot parse angle '" + text +
        "' (expected radians or a pi fraction like pi/3)");
  }
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw mflip::invalid_input("cannot open output file '" + path + "'");
  out << content;
  out.flush();
  if (!out)
    throw mflip::invalid_input("failed writing output file '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Complementarity decomposition and multipartite entanglement toolkit"};
  app.require_subcommand(1);

  std::string state_path;
  std::string analyze_out;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Report the full analysis of one state");
  analyze->add_option("--state", state_path, "Input state JSON document")
      ->required();
  analyze->add_option("--out", analyze_out,
                      "Output path (stdout when omitted)");

  std::string family;
  std::string alpha_start = "0";
  std::string alpha_end = "pi";
  int steps = 201;
  std::string sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Evaluate a named family over a uniform alpha grid as CSV");
  sweep_cmd
      ->add_option("--family", family,
                   "Family name: bisep, phi_w, psi_wghz or ghzw_mix")
      ->required();
  sweep_cmd
      ->add_option("--alpha-start", alpha_start,
                   "Grid start, radians or pi fraction")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--alpha-end", alpha_end,
                   "Grid end, radians or pi fraction")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "Number of grid points (>= 2)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Output path (stdout when omitted)");

  std::string suite;
  int samples = 200;
  std::uint64_t seed = 12345;
  CLI::App* check = app.add_subcommand(
      "check", "Run a deterministic self-check suite");
  check
      ->add_option("--suite", suite,
                   "Suite name: identities, oracles, decomposition or bounds")
      ->required();
  check->add_option("--samples", samples, "Samples per invariant")
      ->capture_default_str();
  check->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) {
      const mflip::StateData state = mflip::read_state_file(state_path);
      write_output(mflip::analysis_report_json(state), analyze_out);
    } else if (sweep_cmd->parsed()) {
      const auto rows =
          mflip::sweep(mflip::family_from_string(family),
                       parse_angle(alpha_start), parse_angle(alpha_end), steps);
      std::ostringstream csv;
      mflip::write_csv(rows, csv);
      write_output(csv.str(), sweep_out);
    } else if (check->parsed()) {
      if (!mflip::run_check_suite(suite, samples, seed, std::cout)) {
        std::cerr << "check: suite '" << suite << "' reported failures\n";
        return 2;
      }
    }
  } catch (const mflip::invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const mflip::numerical_failure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

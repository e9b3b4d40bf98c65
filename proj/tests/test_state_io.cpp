#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mflip/errors.hpp"
#include "mflip/families.hpp"
#include "mflip/state.hpp"
#include "mflip/state_io.hpp"

using namespace mflip;

namespace {

StateData parse(const std::string& text) {
  std::istringstream in(text);
  return read_state_json(in);
}

}  // namespace

TEST_CASE("pure state documents round-trip") {
  const StateData original = ghz_state();
  std::ostringstream out;
  write_state_json(original, out);
  const StateData back = parse(out.str());

  const StateVector& psi = std::get<StateVector>(back);
  CHECK(psi.dims().local() == std::vector<int>{2, 2, 2});
  CHECK((psi.amplitudes() - ghz_state().amplitudes()).norm() < 1e-12);
}

TEST_CASE("mixed state documents round-trip") {
  const StateData original = random_mixed(Dims({2, 2}), 3, 19);
  std::ostringstream out;
  write_state_json(original, out);
  const StateData back = parse(out.str());

  const DensityMatrix& rho = std::get<DensityMatrix>(back);
  CHECK((rho.matrix() - std::get<DensityMatrix>(original).matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("malformed documents are rejected with diagnostics") {
  CHECK_THROWS_AS(parse("not json"), invalid_input);
  CHECK_THROWS_AS(parse("[1,2,3]"), invalid_input);
  CHECK_THROWS_AS(parse(R"({"kind":"pure"})"), invalid_input);
  CHECK_THROWS_AS(parse(R"({"dims":[2],"amplitudes":[[1,0],[0,0]]})"),
                  invalid_input);
  CHECK_THROWS_AS(parse(R"({"dims":[2],"kind":"funky"})"), invalid_input);
  CHECK_THROWS_AS(parse(R"({"dims":[1],"kind":"pure","amplitudes":[[1,0]]})"),
                  invalid_input);
  CHECK_THROWS_AS(
      parse(R"({"dims":[2],"kind":"pure","amplitudes":[[1,0]]})"),
      invalid_input);
  CHECK_THROWS_AS(
      parse(R"({"dims":[2],"kind":"pure","amplitudes":[[1,0],["x",0]]})"),
      invalid_input);
  CHECK_THROWS_AS(
      parse(R"({"dims":[2],"kind":"pure","amplitudes":[[0,0],[0,0]]})"),
      invalid_input);
  CHECK_THROWS_AS(
      parse(R"({"dims":[2],"kind":"mixed","matrix":[[[1,0]],[[0,0]]]})"),
      invalid_input);
  // Valid shape but not a density matrix (trace 2).
  CHECK_THROWS_AS(
      parse(
          R"({"dims":[2],"kind":"mixed","matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})"),
      invalid_input);
}

TEST_CASE("missing files are reported as invalid input") {
  CHECK_THROWS_AS(read_state_file("/no/such/file.json"), invalid_input);
}

TEST_CASE("analysis report for the parity-entangled triple") {
  const std::string text = analysis_report_json(StateData(ghz_state()));
  const nlohmann::json j = nlohmann::json::parse(text);

  CHECK(j.at("schema").get<int>() == 1);
  CHECK(j.at("kind").get<std::string>() == "pure");
  CHECK(j.at("dims").get<std::vector<int>>() == std::vector<int>{2, 2, 2});
  CHECK(j.at("purity").get<double>() == doctest::Approx(1.0).epsilon(1e-10));

  REQUIRE(j.at("subsystems").size() == 3);
  for (const auto& sub : j.at("subsystems"))
    CHECK(sub.at("mixedness").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-10));

  CHECK(j.at("concurrence_sq").at("per_m").at("3").get<double>() ==
        doctest::Approx(3.0).epsilon(1e-10));
  CHECK(j.at("concurrence_sq").at("total").get<double>() ==
        doctest::Approx(3.0).epsilon(1e-10));

  CHECK(j.at("tripartite").at("e3").get<double>() ==
        doctest::Approx(3.0).epsilon(1e-10));
  CHECK_FALSE(j.at("tripartite").at("estimate").get<bool>());

  const auto& budget = j.at("info_budget");
  CHECK(budget.at("n").get<int>() == 3);
  CHECK(budget.at("local_info").get<double>() +
            budget.at("entanglement").get<double>() +
            budget.at("residual").get<double>() ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK_FALSE(budget.at("estimate").get<bool>());
}

TEST_CASE("analysis report for a mixed three-qubit state") {
  const StateData state = std::get<DensityMatrix>(
      make_state({Family::ghzw_mix, 3.14159265358979323846}));
  const std::string text = analysis_report_json(state);
  const nlohmann::json j = nlohmann::json::parse(text);

  CHECK(j.at("kind").get<std::string>() == "mixed");
  CHECK(j.at("entanglement_bound").at("detected").get<bool>());
  CHECK(j.at("entanglement_bound").at("per_m").at("2").get<double>() ==
        doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-6));
  CHECK(j.at("tripartite").at("estimate").get<bool>());
  CHECK(j.at("info_budget").at("estimate").get<bool>());
}

TEST_CASE("two-qubit reports have no three-party section") {
  const std::string text = analysis_report_json(StateData(bell_state()));
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK_FALSE(j.contains("tripartite"));
  CHECK(j.at("concurrence_sq").at("per_m").at("2").get<double>() ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("reports are deterministic") {
  const StateData state = random_mixed(Dims({2, 2}), 2, 77);
  CHECK(analysis_report_json(state) == analysis_report_json(state));
}

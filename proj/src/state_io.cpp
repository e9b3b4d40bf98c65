#include "mflip/state_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mflip/bounds.hpp"
#include "mflip/complementarity.hpp"
#include "mflip/errors.hpp"
#include "mflip/flip.hpp"
#include "mflip/tripartite.hpp"

namespace mflip {

namespace {

using nlohmann::json;

void require(bool condition, const std::string& message) {
  if (!condition) throw invalid_input("state document: " + message);
}

Complex read_complex(const json& j, const std::string& where) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() &&
              j[1].is_number(),
          where + " must be a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

Dims read_dims(const json& j) {
  require(j.contains("dims"), "missing \"dims\"");
  const json& d = j["dims"];
  require(d.is_array() && !d.empty(), "\"dims\" must be a nonempty array");
  std::vector<int> local;
  for (const json& entry : d) {
    require(entry.is_number_integer(), "\"dims\" entries must be integers");
    local.push_back(entry.get<int>());
  }
  return Dims(local);
}

StateData parse_state(const json& j) {
  require(j.is_object(), "top level must be an object");
  const Dims dims = read_dims(j);
  require(j.contains("kind") && j["kind"].is_string(),
          "missing string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "pure") {
    require(j.contains("amplitudes"), "pure state needs \"amplitudes\"");
    const json& amps = j["amplitudes"];
    require(amps.is_array() &&
                static_cast<long>(amps.size()) == dims.total(),
            "\"amplitudes\" must list one entry per basis state (" +
                std::to_string(dims.total()) + ")");
    Eigen::VectorXcd v(dims.total());
    for (long i = 0; i < dims.total(); ++i)
      v(i) = read_complex(amps[static_cast<std::size_t>(i)],
                          "amplitude " + std::to_string(i));
    return StateVector(dims, std::move(v));
  }
  if (kind == "mixed") {
    require(j.contains("matrix"), "mixed state needs \"matrix\"");
    const json& rows = j["matrix"];
    require(rows.is_array() &&
                static_cast<long>(rows.size()) == dims.total(),
            "\"matrix\" must have one row per basis state (" +
                std::to_string(dims.total()) + ")");
    Eigen::MatrixXcd m(dims.total(), dims.total());
    for (long r = 0; r < dims.total(); ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      require(row.is_array() &&
                  static_cast<long>(row.size()) == dims.total(),
              "matrix row " + std::to_string(r) + " has wrong length");
      for (long c = 0; c < dims.total(); ++c)
        m(r, c) = read_complex(row[static_cast<std::size_t>(c)],
                               "matrix entry (" + std::to_string(r) + ", " +
                                   std::to_string(c) + ")");
    }
    return DensityMatrix(dims, std::move(m));
  }
  throw invalid_input("state document: \"kind\" must be \"pure\" or \"mixed\"");
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json triple_json(int index, const ComplementarityTriple& t) {
  return json{{"subsystem", index},
              {"predictability", t.predictability},
              {"coherence", t.coherence},
              {"mixedness", t.mixedness},
              {"single_property_sq", t.single_property_sq}};
}

}  // namespace

StateData read_state_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("state document: invalid JSON: ") +
                        e.what());
  }
  return parse_state(j);
}

StateData read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open state file '" + path + "'");
  return read_state_json(in);
}

void write_state_json(const StateData& state, std::ostream& out) {
  json j;
  if (std::holds_alternative<StateVector>(state)) {
    const StateVector& psi = std::get<StateVector>(state);
    j["dims"] = psi.dims().local();
    j["kind"] = "pure";
    json amps = json::array();
    for (long i = 0; i < psi.dims().total(); ++i)
      amps.push_back(complex_json(psi.amp(i)));
    j["amplitudes"] = std::move(amps);
  } else {
    const DensityMatrix& rho = std::get<DensityMatrix>(state);
    j["dims"] = rho.dims().local();
    j["kind"] = "mixed";
    json rows = json::array();
    for (long r = 0; r < rho.dims().total(); ++r) {
      json row = json::array();
      for (long c = 0; c < rho.dims().total(); ++c)
        row.push_back(complex_json(rho.matrix()(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  out << j.dump(2) << '\n';
}

std::string analysis_report_json(const StateData& state) {
  const bool pure = std::holds_alternative<StateVector>(state);
  const DensityMatrix rho = pure
      ? pure_to_density(std::get<StateVector>(state))
      : std::get<DensityMatrix>(state);
  const Dims& dims = rho.dims();

  json j;
  j["schema"] = 1;
  j["dims"] = dims.local();
  j["kind"] = pure ? "pure" : "mixed";
  j["purity"] = purity(rho);

  json subsystems = json::array();
  for (int s = 0; s < dims.n(); ++s)
    subsystems.push_back(triple_json(s, subsystem_triple(rho, s)));
  j["subsystems"] = std::move(subsystems);

  double entanglement = 0.0;
  if (pure) {
    const ConcurrenceSpectrum spectrum =
        concurrence_spectrum(std::get<StateVector>(state));
    json per_m = json::object();
    for (const auto& [m, value] : spectrum.per_m)
      per_m[std::to_string(m)] = value;
    j["concurrence_sq"] = {{"per_m", std::move(per_m)},
                           {"total", spectrum.total}};
    entanglement = spectrum.total;
  } else {
    const BoundResult bounds = bound_result(rho);
    json per_m = json::object();
    for (const auto& [m, value] : bounds.per_m) {
      per_m[std::to_string(m)] = value;
      entanglement += value * value;
    }
    j["entanglement_bound"] = {{"per_m", std::move(per_m)},
                               {"detected", bounds.detected}};
  }

  if (dims.local() == std::vector<int>{2, 2, 2}) {
    const TripartiteDecomposition d =
        pure ? decompose(std::get<StateVector>(state)) : decompose_mixed(rho);
    j["tripartite"] = {{"e12", d.e12},     {"e13", d.e13},
                       {"e23", d.e23},     {"e2_total", d.e2_total},
                       {"e3", d.e3},       {"total", d.total},
                       {"estimate", d.estimate}};
  }

  const InfoBudget budget = info_budget(rho, entanglement);
  j["info_budget"] = {{"n", budget.n},
                      {"local_info", budget.local_info},
                      {"entanglement", budget.entanglement},
                      {"residual", budget.residual},
                      {"estimate", !pure}};
  return j.dump(2) + "\n";
}

}  // namespace mflip

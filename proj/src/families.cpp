#include "mflip/families.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "mflip/complementarity.hpp"
#include "mflip/errors.hpp"
#include "mflip/tripartite.hpp"

namespace mflip {

namespace {

const Dims& three_qubits() {
  static const Dims dims({2, 2, 2});
  return dims;
}

StateVector from_amplitudes(std::initializer_list<std::pair<long, Complex>> terms) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(three_qubits().total());
  for (const auto& [flat, amp] : terms) v(flat) = amp;
  return StateVector(three_qubits(), v);
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "bisep") return Family::bisep;
  if (name == "phi_w") return Family::phi_w;
  if (name == "psi_wghz") return Family::psi_wghz;
  if (name == "ghzw_mix") return Family::ghzw_mix;
  throw invalid_input("unknown family '" + name +
                      "' (expected bisep, phi_w, psi_wghz or ghzw_mix)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::bisep: return "bisep";
    case Family::phi_w: return "phi_w";
    case Family::psi_wghz: return "psi_wghz";
    case Family::ghzw_mix: return "ghzw_mix";
  }
  throw invalid_input("family_name: unrecognized family value");
}

StateVector ghz_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return from_amplitudes({{0, r}, {7, r}});
}

StateVector w_state() {
  const double r = 1.0 / std::sqrt(3.0);
  return from_amplitudes({{1, r}, {2, r}, {4, r}});
}

StateVector bell_state() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = r;
  v(3) = r;
  return StateVector(Dims({2, 2}), v);
}

std::variant<StateVector, DensityMatrix> make_state(const FamilySpec& spec) {
  if (!std::isfinite(spec.alpha))
    throw invalid_input("make_state: alpha must be finite");
  const double s = std::sin(spec.alpha);
  const double c = std::cos(spec.alpha);
  switch (spec.name) {
    case Family::bisep: {
      const double r = 1.0 / std::sqrt(2.0);
      return from_amplitudes(
          {{0, r * c}, {1, r * s}, {6, r * c}, {7, r * s}});
    }
    case Family::phi_w: {
      const double w = s / std::sqrt(3.0);
      return from_amplitudes({{1, w}, {2, w}, {4, w}, {7, c}});
    }
    case Family::psi_wghz: {
      const double w = s / std::sqrt(3.0);
      const double g = c / std::sqrt(2.0);
      return from_amplitudes({{0, g}, {1, w}, {2, w}, {4, w}, {7, g}});
    }
    case Family::ghzw_mix: {
      const double half = 0.5 * spec.alpha;
      const double pw = std::sin(half) * std::sin(half);
      const Eigen::MatrixXcd mix =
          pw * pure_to_density(w_state()).matrix() +
          (1.0 - pw) * pure_to_density(ghz_state()).matrix();
      return DensityMatrix::trusted(three_qubits(), mix);
    }
  }
  throw invalid_input("make_state: unrecognized family value");
}

namespace {

double local_info_of(const DensityMatrix& rho) {
  double total = 0.0;
  for (int s = 0; s < rho.dims().n(); ++s)
    total += subsystem_triple(rho, s).single_property_sq;
  return total;
}

SweepRow evaluate_row(Family family, double alpha) {
  SweepRow row;
  row.alpha = alpha;
  const auto state = make_state(FamilySpec{family, alpha});
  if (std::holds_alternative<StateVector>(state)) {
    const StateVector& psi = std::get<StateVector>(state);
    const DensityMatrix rho = pure_to_density(psi);
    const TripartiteDecomposition d = decompose(psi);
    row.e12 = d.e12;
    row.e13 = d.e13;
    row.e23 = d.e23;
    row.e2_total = d.e2_total;
    row.e3 = d.e3;
    row.c2_sq = m_flip_concurrence_sq(psi, 2);
    row.c3_sq = m_flip_concurrence_sq(psi, 3);
    row.local_info = local_info_of(rho);
    row.estimate = false;
  } else {
    const DensityMatrix& rho = std::get<DensityMatrix>(state);
    const TripartiteDecomposition d = decompose_mixed(rho);
    row.e12 = d.e12;
    row.e13 = d.e13;
    row.e23 = d.e23;
    row.e2_total = d.e2_total;
    row.e3 = d.e3;
    const double b2 = bound(rho, 2);
    const double b3 = bound(rho, 3);
    row.c2_sq = b2 * b2;
    row.c3_sq = b3 * b3;
    row.local_info = local_info_of(rho);
    row.estimate = true;
  }
  row.residual = 3.0 - row.local_info - row.e2_total - row.e3;
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(Family family, double alpha_start,
                            double alpha_end, int steps) {
  if (!std::isfinite(alpha_start) || !std::isfinite(alpha_end))
    throw invalid_input("sweep: alpha range must be finite");
  if (steps < 2)
    throw invalid_input("sweep: need at least 2 grid points, got " +
                        std::to_string(steps));
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const double span = alpha_end - alpha_start;
  for (int i = 0; i < steps; ++i) {
    const double alpha =
        alpha_start + span * static_cast<double>(i) / (steps - 1);
    try {
      rows.push_back(evaluate_row(family, alpha));
    } catch (const invalid_input& e) {
      throw invalid_input("sweep at alpha = " + std::to_string(alpha) + ": " +
                          e.what());
    } catch (const numerical_failure& e) {
      throw numerical_failure("sweep at alpha = " + std::to_string(alpha) +
                              ": " + e.what());
    }
  }
  return rows;
}

namespace {

std::string format_value(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "alpha,I,E12,E13,E23,E2,E3,R,C2sq,C3sq\n";
  for (const SweepRow& row : rows) {
    out << format_value(row.alpha) << ',' << format_value(row.local_info)
        << ',' << format_value(row.e12) << ',' << format_value(row.e13) << ','
        << format_value(row.e23) << ',' << format_value(row.e2_total) << ','
        << format_value(row.e3) << ',' << format_value(row.residual) << ','
        << format_value(row.c2_sq) << ',' << format_value(row.c3_sq) << '\n';
  }
}

}  // namespace mflip

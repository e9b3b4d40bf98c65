#include "mflip/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mflip/errors.hpp"

namespace mflip {

namespace {

// Flat indices of the four basis states a term touches: the base a, the
// full flip F(a), the pivot-only flip a_s, and F(a_s) (everything but the
// pivot flipped).
struct Corners {
  long a = 0;
  long fa = 0;
  long as = 0;
  long fas = 0;
};

Corners term_corners(const FlipTerm& term, const Dims& dims) {
  if (!is_admissible(term.base, term.pattern))
    throw invalid_input("flip term: base index not admissible for its pattern");
  const auto it = std::find(term.pattern.sites.begin(),
                            term.pattern.sites.end(), term.pivot);
  if (it == term.pattern.sites.end())
    throw invalid_input("flip term: pivot " + std::to_string(term.pivot) +
                        " is not a pattern site");
  const int pivot = static_cast<int>(it - term.pattern.sites.begin());
  std::vector<int> rest;
  for (std::size_t i = 0; i < term.pattern.sites.size(); ++i)
    if (static_cast<int>(i) != pivot) rest.push_back(static_cast<int>(i));

  Corners c;
  c.a = flat_index(term.base, dims);
  c.fa = flat_index(flip_all(term.base, term.pattern), dims);
  c.as = flat_index(flip_coords(term.base, term.pattern, {pivot}), dims);
  c.fas = flat_index(flip_coords(term.base, term.pattern, rest), dims);
  return c;
}

struct Dyad {
  long u = 0;        // row index of |u><v|
  long v = 0;        // column index
  double sign = 1.0;
};

std::vector<Dyad> one_sided_dyads(const Corners& c) {
  return {{c.fa, c.a, 1.0}, {c.fas, c.as, -1.0}};
}

std::vector<Dyad> symmetric_dyads(const Corners& c) {
  return {{c.fa, c.a, 1.0},
          {c.a, c.fa, 1.0},
          {c.fas, c.as, -1.0},
          {c.as, c.fas, -1.0}};
}

Eigen::MatrixXcd dyad_matrix(const std::vector<Dyad>& dyads, long n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const Dyad& d : dyads) m(d.u, d.v) += d.sign;
  return m;
}

// Descending singular values of sqrt(rho) T sqrt(rho)^*, where
// T = sum_j sign_j |u_j><v_j|. With sqrt(rho) Hermitian its conjugate is
// its transpose, so the product is A diag(sign) B^T with A (resp. B)
// stacking the u (resp. v) columns of sqrt(rho). The singular values
// survive a thin-QR reduction to the k x k core R_A diag(sign) R_B^T; the
// small SVD avoids the noise floor of eigensolving the full product.
std::vector<double> dyad_singular_values(const Eigen::MatrixXcd& sqrt_rho,
                                         const std::vector<Dyad>& dyads) {
  const long n = sqrt_rho.rows();
  const long k = static_cast<long>(dyads.size());
  Eigen::MatrixXcd a(n, k);
  Eigen::MatrixXcd b(n, k);
  for (long j = 0; j < k; ++j) {
    a.col(j) = sqrt_rho.col(dyads[static_cast<std::size_t>(j)].u);
    b.col(j) = sqrt_rho.col(dyads[static_cast<std::size_t>(j)].v);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr_a(a);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr_b(b);
  const Eigen::MatrixXcd r_a =
      qr_a.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  const Eigen::MatrixXcd r_b =
      qr_b.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  Eigen::VectorXcd signs(k);
  for (long j = 0; j < k; ++j)
    signs(j) = dyads[static_cast<std::size_t>(j)].sign;
  const Eigen::MatrixXcd core = r_a * signs.asDiagonal() * r_b.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(core);
  std::vector<double> values(svd.singularValues().data(),
                             svd.singularValues().data() + k);
  return values;  // JacobiSVD sorts descending
}

LambdaSpectrum padded_spectrum(std::vector<double> values, long n) {
  LambdaSpectrum spectrum;
  spectrum.lambdas = std::move(values);
  spectrum.lambdas.resize(static_cast<std::size_t>(n), 0.0);
  return spectrum;
}

// Contribution of one term's singular values: (w/2) max(0, 2 l1 - sum)^2.
double term_contribution(const std::vector<double>& lambdas, double weight) {
  const double sum =
      std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
  const double margin = 2.0 * lambdas.front() - sum;
  return margin > 0.0 ? 0.5 * weight * margin * margin : 0.0;
}

}  // namespace

Eigen::MatrixXcd flip_term_operator(const FlipTerm& term, const Dims& dims) {
  return dyad_matrix(one_sided_dyads(term_corners(term, dims)), dims.total());
}

Eigen::MatrixXcd symmetric_flip_operator(const FlipTerm& term,
                                         const Dims& dims) {
  return dyad_matrix(symmetric_dyads(term_corners(term, dims)), dims.total());
}

Eigen::MatrixXcd flip_density_matrix(const DensityMatrix& rho,
                                     const FlipTerm& term) {
  const Eigen::MatrixXcd t = flip_term_operator(term, rho.dims());
  return t * rho.matrix().conjugate() * t.adjoint();
}

LambdaSpectrum lambda_spectrum(const DensityMatrix& rho,
                               const FlipTerm& term) {
  const Corners c = term_corners(term, rho.dims());
  const Eigen::MatrixXcd sqrt_rho = psd_sqrt(rho.matrix());
  return padded_spectrum(dyad_singular_values(sqrt_rho, one_sided_dyads(c)),
                         rho.dims().total());
}

LambdaSpectrum symmetric_lambda_spectrum(const DensityMatrix& rho,
                                         const FlipTerm& term) {
  const Corners c = term_corners(term, rho.dims());
  const Eigen::MatrixXcd sqrt_rho = psd_sqrt(rho.matrix());
  return padded_spectrum(dyad_singular_values(sqrt_rho, symmetric_dyads(c)),
                         rho.dims().total());
}

double bound(const DensityMatrix& rho, int m) {
  const Dims& dims = rho.dims();
  if (m < 2 || m > dims.n())
    throw invalid_input("bound: need 2 <= m <= n, got m = " +
                        std::to_string(m));
  const Eigen::MatrixXcd sqrt_rho = psd_sqrt(rho.matrix());

  double total = 0.0;
  for (const FlipPattern& pattern : enumerate_patterns(dims, m)) {
    for (const auto& base : admissible_indices(dims, pattern)) {
      // The Hermitian pair operator of a and F(a) coincide; keep one
      // representative per orbit.
      const long a = flat_index(base, dims);
      const long fa = flat_index(flip_all(base, pattern), dims);
      if (a >= fa) continue;
      for (int site : pattern.sites) {
        const Corners c =
            term_corners(FlipTerm{pattern, base, site}, dims);
        const auto lambdas = dyad_singular_values(sqrt_rho, symmetric_dyads(c));
        total += term_contribution(lambdas, site_weight(dims.dim(site)));
      }
    }
  }
  return std::sqrt(total);
}

BoundResult bound_result(const DensityMatrix& rho) {
  BoundResult result;
  for (int m = 2; m <= rho.dims().n(); ++m) {
    const double value = bound(rho, m);
    result.per_m[m] = value;
    if (value > kDetectionThreshold) result.detected = true;
  }
  return result;
}

double wootters_mixed(const DensityMatrix& rho) {
  if (rho.dims().local() != std::vector<int>{2, 2})
    throw invalid_input("wootters_mixed: requires two qubits");
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::MatrixXcd sqrt_rho = psd_sqrt(rho.matrix());
  const Eigen::MatrixXcd k = sqrt_rho * yy * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k);
  const auto& s = svd.singularValues();
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

bool ppt_negative(const DensityMatrix& rho,
                  const std::vector<int>& transpose_side) {
  const Dims& dims = rho.dims();
  if (transpose_side.empty())
    throw invalid_input("ppt_negative: transpose side must be nonempty");
  std::vector<bool> flip(static_cast<std::size_t>(dims.n()), false);
  for (int s : transpose_side) {
    if (s < 0 || s >= dims.n())
      throw invalid_input("ppt_negative: subsystem index " +
                          std::to_string(s) + " out of range");
    if (flip[static_cast<std::size_t>(s)])
      throw invalid_input("ppt_negative: duplicate subsystem index");
    flip[static_cast<std::size_t>(s)] = true;
  }

  const long n = dims.total();
  Eigen::MatrixXcd pt(n, n);
  for (long i = 0; i < n; ++i) {
    auto row = coords_of(i, dims);
    for (long j = 0; j < n; ++j) {
      auto col = coords_of(j, dims);
      auto r = row;
      auto c = col;
      for (int s = 0; s < dims.n(); ++s) {
        if (flip[static_cast<std::size_t>(s)])
          std::swap(r[static_cast<std::size_t>(s)],
                    c[static_cast<std::size_t>(s)]);
      }
      pt(flat_index(r, dims), flat_index(c, dims)) = rho.matrix()(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_failure("ppt_negative: eigensolver did not converge");
  return solver.eigenvalues().minCoeff() < -1e-10;
}

}  // namespace mflip

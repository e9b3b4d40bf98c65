#include "mflip/state.hpp"

#include <cmath>
#include <string>

#include "mflip/errors.hpp"

namespace mflip {

namespace {

constexpr double kNormTol = 1e-12;

void check_finite(const Eigen::MatrixXcd& m, const char* what) {
  if (!m.allFinite())
    throw invalid_input(std::string(what) + ": non-finite entries");
}

}  // namespace

StateVector::StateVector(Dims dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dims_.total())
    throw invalid_input("state vector: length " +
                        std::to_string(amplitudes_.size()) +
                        " does not match total dimension " +
                        std::to_string(dims_.total()));
  check_finite(amplitudes_, "state vector");
  const double norm = amplitudes_.norm();
  if (norm < 1e-6)
    throw invalid_input("state vector: norm too small to normalize");
  if (std::abs(norm - 1.0) > kNormTol) amplitudes_ /= norm;
}

DensityMatrix::DensityMatrix(Dims dims, Eigen::MatrixXcd matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != dims_.total() || matrix_.cols() != dims_.total())
    throw invalid_input("density matrix: shape does not match dims");
  check_finite(matrix_, "density matrix");
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol)
    throw invalid_input("density matrix: not Hermitian (deviation " +
                        std::to_string(herm) + ")");
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw invalid_input("density matrix: trace " + std::to_string(tr) +
                        " is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_,
                                                     Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPsdTol)
    throw invalid_input("density matrix: eigenvalue " +
                        std::to_string(min_eig) + " below PSD tolerance");
}

DensityMatrix::DensityMatrix(Trusted, Dims dims, Eigen::MatrixXcd matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::trusted(Dims dims, Eigen::MatrixXcd matrix) {
  return DensityMatrix(Trusted{}, std::move(dims), std::move(matrix));
}

DensityMatrix pure_to_density(const StateVector& psi) {
  return DensityMatrix::trusted(
      psi.dims(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& discard) {
  const Dims& dims = rho.dims();
  std::vector<bool> drop(static_cast<std::size_t>(dims.n()), false);
  for (int s : discard) {
    if (s < 0 || s >= dims.n())
      throw invalid_input("partial_trace: subsystem index out of range");
    if (drop[static_cast<std::size_t>(s)])
      throw invalid_input("partial_trace: duplicate subsystem index");
    drop[static_cast<std::size_t>(s)] = true;
  }
  if (discard.empty())
    throw invalid_input("partial_trace: nothing to trace out");
  if (static_cast<int>(discard.size()) == dims.n())
    throw invalid_input("partial_trace: cannot trace out every subsystem");

  std::vector<int> kept;
  std::vector<int> kept_dims;
  for (int s = 0; s < dims.n(); ++s)
    if (!drop[static_cast<std::size_t>(s)]) {
      kept.push_back(s);
      kept_dims.push_back(dims.dim(s));
    }
  Dims out_dims(kept_dims);

  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(out_dims.total(), out_dims.total());
  const long total = dims.total();
  for (long a = 0; a < total; ++a) {
    const std::vector<int> ca = coords_of(a, dims);
    std::vector<int> ka(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      ka[i] = ca[static_cast<std::size_t>(kept[i])];
    const long ra = flat_index(ka, out_dims);
    for (long b = 0; b < total; ++b) {
      const std::vector<int> cb = coords_of(b, dims);
      bool match = true;
      for (int s = 0; s < dims.n(); ++s)
        if (drop[static_cast<std::size_t>(s)] &&
            ca[static_cast<std::size_t>(s)] != cb[static_cast<std::size_t>(s)]) {
          match = false;
          break;
        }
      if (!match) continue;
      std::vector<int> kb(kept.size());
      for (std::size_t i = 0; i < kept.size(); ++i)
        kb[i] = cb[static_cast<std::size_t>(kept[i])];
      out(ra, flat_index(kb, out_dims)) += rho.matrix()(a, b);
    }
  }
  return DensityMatrix::trusted(out_dims, std::move(out));
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

StateVector conjugate(const StateVector& psi) {
  return StateVector(psi.dims(), psi.amplitudes().conjugate());
}

namespace {

void check_unitary(const Eigen::MatrixXcd& u, int d) {
  if (u.rows() != d || u.cols() != d)
    throw invalid_input("local unitary: shape does not match site dimension");
  const double dev =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw invalid_input("local unitary: U^H U deviates from identity by " +
                        std::to_string(dev));
}

// Stride walk applying a one-site operator in place over the flat index.
template <typename Apply>
void for_each_site_block(const Dims& dims, int site, Apply&& apply) {
  const int d = dims.dim(site);
  long inner = 1;
  for (int t = site + 1; t < dims.n(); ++t) inner *= dims.dim(t);
  const long outer = dims.total() / (inner * d);
  for (long o = 0; o < outer; ++o)
    for (long i = 0; i < inner; ++i) apply(o * d * inner + i, inner, d);
}

}  // namespace

StateVector apply_local_unitary(const StateVector& psi, int site,
                                const Eigen::MatrixXcd& u) {
  const Dims& dims = psi.dims();
  if (site < 0 || site >= dims.n())
    throw invalid_input("apply_local_unitary: site out of range");
  check_unitary(u, dims.dim(site));
  Eigen::VectorXcd out = psi.amplitudes();
  Eigen::VectorXcd block(dims.dim(site));
  for_each_site_block(dims, site, [&](long base, long stride, int d) {
    for (int x = 0; x < d; ++x) block(x) = out(base + x * stride);
    block = (u * block).eval();
    for (int x = 0; x < d; ++x) out(base + x * stride) = block(x);
  });
  return StateVector(dims, std::move(out));
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, int site,
                                  const Eigen::MatrixXcd& u) {
  const Dims& dims = rho.dims();
  if (site < 0 || site >= dims.n())
    throw invalid_input("apply_local_unitary: site out of range");
  check_unitary(u, dims.dim(site));
  // Build the full-space unitary by strides; dims are capped so dense is fine.
  Eigen::MatrixXcd big =
      Eigen::MatrixXcd::Zero(dims.total(), dims.total());
  const int d = dims.dim(site);
  long inner = 1;
  for (int t = site + 1; t < dims.n(); ++t) inner *= dims.dim(t);
  for (long flat = 0; flat < dims.total(); ++flat) {
    const int x = static_cast<int>((flat / inner) % d);
    const long base = flat - x * inner;
    for (int y = 0; y < d; ++y) big(base + y * inner, flat) = u(y, x);
  }
  return DensityMatrix::trusted(dims, big * rho.matrix() * big.adjoint());
}

StateVector haar_random_pure(const Dims& dims, Rng& rng) {
  Eigen::VectorXcd v(dims.total());
  for (long i = 0; i < dims.total(); ++i) v(i) = rng.complex_gauss();
  return StateVector(dims, std::move(v));
}

StateVector haar_random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(dims, rng);
}

DensityMatrix random_mixed(const Dims& dims, int rank, Rng& rng) {
  if (rank < 1 || rank > dims.total())
    throw invalid_input("random_mixed: rank must be in [1, total]");
  std::vector<double> weights(static_cast<std::size_t>(rank));
  double sum = 0.0;
  for (double& w : weights) {
    w = rng.exponential();
    sum += w;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dims.total(), dims.total());
  for (int r = 0; r < rank; ++r) {
    const StateVector psi = haar_random_pure(dims, rng);
    m += (weights[static_cast<std::size_t>(r)] / sum) * psi.amplitudes() *
         psi.amplitudes().adjoint();
  }
  return DensityMatrix::trusted(dims, std::move(m));
}

DensityMatrix random_mixed(const Dims& dims, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_mixed(dims, rank, rng);
}

Eigen::MatrixXcd random_unitary(int d, Rng& rng) {
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gauss();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
  }
  return q;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success)
    throw numerical_failure("psd_sqrt: eigensolver did not converge");
  Eigen::VectorXd w = es.eigenvalues();
  for (long i = 0; i < w.size(); ++i) {
    if (w(i) < -1e-8)
      throw numerical_failure("psd_sqrt: eigenvalue " + std::to_string(w(i)) +
                              " too negative for a PSD matrix");
    w(i) = w(i) > 0.0 ? std::sqrt(w(i)) : 0.0;
  }
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace mflip

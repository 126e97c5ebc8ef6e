#include "rieszlab/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace rieszlab {

namespace {
constexpr Eigen::Index kDenseCap = 2048;
}

std::pair<double, double> extreme_eigenvalues(const CMatrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0) {
    throw std::invalid_argument("extreme_eigenvalues: matrix must be square and nonempty");
  }
  const double scale = g.cwiseAbs().maxCoeff();
  const double asym = (g - g.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * std::max(scale, 1.0)) {
    throw std::invalid_argument("extreme_eigenvalues: matrix is not Hermitian");
  }

  if (g.rows() <= kDenseCap) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(g, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("extreme_eigenvalues: eigensolver failed");
    }
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
  }
  return lanczos_extremes([&g](const CVector& x) -> CVector { return g.selfadjointView<Eigen::Lower>() * x; },
                          g.rows(), 400);
}

std::pair<double, double> extreme_eigenvalues(const GramMatrix& g) {
  return extreme_eigenvalues(g.entries);
}

std::pair<double, double> lanczos_extremes(const std::function<CVector(const CVector&)>& matvec,
                                           Eigen::Index dim, int max_iters) {
  if (dim <= 0) throw std::invalid_argument("lanczos_extremes: empty operator");
  const int iters = int(std::min<Eigen::Index>(dim, max_iters));
  // Deterministic pseudo-random start vector; any fixed dense vector does.
  CVector v(dim);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (Eigen::Index i = 0; i < dim; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const double re = double((state >> 11) & 0x1fffff) / double(0x1fffff) - 0.5;
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const double im = double((state >> 11) & 0x1fffff) / double(0x1fffff) - 0.5;
    v[i] = Complex(re, im);
  }
  v.normalize();

  const bool full_reorth = dim <= 16384;
  std::vector<CVector> basis;
  if (full_reorth) basis.reserve(std::size_t(iters));

  std::vector<double> alpha, beta;
  CVector v_prev = CVector::Zero(dim);
  double beta_prev = 0.0;
  for (int j = 0; j < iters; ++j) {
    if (full_reorth) basis.push_back(v);
    CVector w = matvec(v);
    const double a = w.dot(v).real();
    alpha.push_back(a);
    w -= a * v;
    if (j > 0) w -= beta_prev * v_prev;
    if (full_reorth) {
      for (const CVector& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();
    if (b < 1e-14) break;
    beta.push_back(b);
    v_prev = v;
    v = w / b;
    beta_prev = b;
  }

  const int k = int(alpha.size());
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    tri(i, i) = alpha[std::size_t(i)];
    if (i + 1 < k) {
      tri(i, i + 1) = beta[std::size_t(i)];
      tri(i + 1, i) = beta[std::size_t(i)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace rieszlab

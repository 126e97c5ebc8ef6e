#pragma once

#include <memory>
#include <string>

#include "rieszlab/disk.hpp"
#include "rieszlab/intervals.hpp"
#include "rieszlab/system.hpp"
#include "rieszlab/weights.hpp"

namespace rieszlab {

/// Dense Hermitian Gram matrix G_{jk} = int e((lam_k - lam_j) x) w(x) dx
/// over the tagged domain. Diagonal entries equal the weighted measure.
struct GramMatrix {
  CMatrix entries;
  std::string domain_tag;
  double diagonal_value = 0.0;

  Eigen::Index dim() const { return entries.rows(); }

  /// Row-major CSV with interleaved re/im columns (header included).
  std::string to_csv() const;
  std::string to_json() const;
  static GramMatrix from_json(const std::string& text);
};

GramMatrix gram_matrix(const ExponentialSystem& system, const IntervalSet& domain,
                       const WeightSpec& w = WeightSpec::unit());
GramMatrix gram_matrix(const ExponentialSystem2D& system, const Disk& domain);

/// Hermitian Toeplitz Gram operator for arithmetic-progression frequency
/// lists; stores only the first row and multiplies through a circulant FFT
/// embedding. This is what makes the large weighted sections tractable.
class ToeplitzGram {
 public:
  /// Requires system.progression(); entries g(d) = weighted_ft(domain, w, d*step).
  ToeplitzGram(const ExponentialSystem& system, const IntervalSet& domain,
               const WeightSpec& w = WeightSpec::unit());

  Eigen::Index dim() const { return m_; }

  /// y = G x.
  CVector matvec(const CVector& x) const;

  /// Re(x^H G x); clamped to be a real number by Hermitian symmetry.
  double quadratic_form(const CVector& x) const;

  struct SolveStats {
    int iterations = 0;
    double rel_residual = 0.0;
    bool converged = false;
    bool preconditioned = false;
  };

  /// Conjugate-gradient solve of (G + ridge I) x = b with a circulant
  /// preconditioner when the circulant is safely positive definite.
  CVector solve_cg(const CVector& b, double tol, int max_iter, double ridge,
                   SolveStats* stats = nullptr) const;

  /// Materializes the dense matrix (small sections only).
  CMatrix dense() const;

  const CVector& first_row() const { return row_; }

 private:
  Eigen::Index m_ = 0;
  CVector row_;        // g(0..m-1); G_{jk} = g(k - j), g(-d) = conj(g(d))
  Eigen::Index fft_n_ = 0;
  CVector symbol_;     // FFT of the circulant embedding column
  CVector chan_eigs_;  // circulant preconditioner eigenvalues (length m)
  bool chan_ok_ = false;

  struct FftImpl;
  std::shared_ptr<FftImpl> fft_;
};

}  // namespace rieszlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rieszlab/disk.hpp"
#include "rieszlab/transforms.hpp"

namespace rieszlab {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Detected arithmetic-progression structure of a frequency list:
/// freqs[j] = base + j * step. Enables Toeplitz fast paths.
struct ArithmeticProgression {
  double base = 0.0;
  double step = 0.0;
};

/// Finite 1-D frequency list Lambda with its separation constant
/// (minimal pairwise gap). Frequencies keep their construction order;
/// coefficient vectors align with that order.
class ExponentialSystem {
 public:
  explicit ExponentialSystem(std::vector<double> freqs);

  /// Lattice section step * (Z cap [lo_index, hi_index]).
  static ExponentialSystem lattice(double step, long lo_index, long hi_index);

  /// All points of (1/ell) Z inside [-cap, cap].
  static ExponentialSystem lattice_in_band(int ell, double cap);

  const std::vector<double>& freqs() const { return freqs_; }
  std::size_t size() const { return freqs_.size(); }
  double separation() const { return separation_; }
  double operator[](std::size_t i) const { return freqs_[i]; }

  /// Present when the list is an exact arithmetic progression (1e-12 rel).
  const std::optional<ArithmeticProgression>& progression() const { return progression_; }

  std::string to_json() const;
  /// Loads from a JSON array or a one-frequency-per-line text blob.
  static ExponentialSystem parse(const std::string& text);

 private:
  std::vector<double> freqs_;
  double separation_ = 0.0;
  std::optional<ArithmeticProgression> progression_;
};

/// Finite 2-D frequency list for the disk experiments.
class ExponentialSystem2D {
 public:
  explicit ExponentialSystem2D(std::vector<Vec2> freqs);

  /// Z^2 cap [-n, n]^2.
  static ExponentialSystem2D integer_grid(int n);

  const std::vector<Vec2>& freqs() const { return freqs_; }
  std::size_t size() const { return freqs_.size(); }
  double separation() const { return separation_; }

  /// Present when the list is exactly {(i, j)} over a full integer box;
  /// enables the separated-phase evaluation fast path.
  struct IntegerBox {
    int lo_x, hi_x, lo_y, hi_y;
  };
  const std::optional<IntegerBox>& integer_box() const { return box_; }

  std::string to_json() const;
  static ExponentialSystem2D parse(const std::string& text);

 private:
  std::vector<Vec2> freqs_;
  double separation_ = 0.0;
  std::optional<IntegerBox> box_;
};

}  // namespace rieszlab

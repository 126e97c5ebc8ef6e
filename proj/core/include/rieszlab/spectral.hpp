#pragma once

#include <functional>
#include <utility>

#include "rieszlab/gram.hpp"

namespace rieszlab {

/// (lambda_min, lambda_max) of a Hermitian matrix. Dense symmetric reduction
/// up to dimension 2048; Lanczos with full reorthogonalization beyond (the
/// matrix never exceeds 4096 per contract). Throws std::invalid_argument if
/// the input fails the Hermitian check (asymmetry above 1e-8 relative).
std::pair<double, double> extreme_eigenvalues(const CMatrix& g);
std::pair<double, double> extreme_eigenvalues(const GramMatrix& g);

/// Lanczos extreme-pair estimate for a Hermitian operator given through its
/// matvec. Deterministic start vector; full reorthogonalization while the
/// basis fits, plain three-term recurrence otherwise.
std::pair<double, double> lanczos_extremes(const std::function<CVector(const CVector&)>& matvec,
                                           Eigen::Index dim, int max_iters);

}  // namespace rieszlab

#pragma once

#include "dsign/algebra.hpp"

namespace dsign {

/// Uniform [-1,1] entries, resampled until sigma_min / sigma_max >= min_ratio.
Mat random_invertible(int n, Rng& rng, double min_ratio = 0.05);
/// Random matrix in O(n) with the requested determinant sign.
Mat random_orthogonal(int n, Rng& rng, Sign det_sign = Sign::Plus);

/// Random isotope of the classical algebra of dimension 2, 4 or 8.
/// Division by construction.
Algebra random_classical_isotope(int dim, Rng& rng);

/// Rejection-samples structure tensors with entries uniform in [-2, 2] until
/// the exact 2-d division test passes.
Algebra random_2d_division(Rng& rng);

/// Mixed corpus member: classical isotope, optionally transported by a random
/// invertible map (dimension 2 may also come from rejection sampling).
Algebra random_division_algebra(int dim, Rng& rng);

}  // namespace dsign

#pragma once

#include <vector>

#include "dsign/decorated.hpp"

namespace dsign {

struct EQuadStructure {
  Vec e;         // central idempotent
  Mat im_basis;  // n x (n-1) basis of Im_e(A) = {v : v^2 in R e}
};

/// Nonzero idempotents inside the centre (the commutant {z : zx = xz}).
/// Throws CenterTooLarge when the centre has dimension above two.
std::vector<Vec> central_idempotents(const Algebra& a, double tol = kDefaultTol);

/// Whether x^2 lies in span{e, e x} for every x, decided by expanding every
/// 3x3 minor of [e | L_e x | x^2] into its cubic coefficients.
bool is_e_quadratic(const Algebra& a, const Vec& e, double tol = kDefaultTol);

/// Basis of the hyperplane Im_e(A). Columns are e_q - (f_q / f_p) e_p, q != p,
/// where f is the defining linear form and p its largest coordinate.
Mat im_e(const Algebra& a, const Vec& e, double tol = kDefaultTol);

/// The unique qualifying e (dim 4 or 8) together with Im_e(A).
EQuadStructure equadratic_structure(const Algebra& a, double tol = kDefaultTol);

/// (A, R e, Im_e(A)) as an object with m = 1.
DecoratedAlgebra functor_G(const Algebra& a, double tol = kDefaultTol);

/// Largest projection residual of the columns of `x` onto span(`y`), and
/// vice versa; zero iff the two column spaces agree.
double subspace_distance(const Mat& x, const Mat& y);

}  // namespace dsign

#pragma once

#include "dsign/algebra.hpp"

namespace dsign {

/// Algebra with a splitting A = U + V into supplementary subspaces of odd
/// dimension m and n - m, given by column bases.
class DecoratedAlgebra {
 public:
  const Algebra& alg() const { return alg_; }
  const Mat& u() const { return u_; }
  const Mat& v() const { return v_; }
  int m() const { return static_cast<int>(u_.cols()); }
  int n() const { return alg_.dim(); }

 private:
  DecoratedAlgebra(Algebra a, Mat u, Mat v) : alg_(std::move(a)), u_(std::move(u)), v_(std::move(v)) {}
  friend DecoratedAlgebra decorate(Algebra a, Mat u, Mat v, double tol);

  Algebra alg_;
  Mat u_;
  Mat v_;
};

/// Throws BadSplit unless m is odd, m < n and [U|V] is invertible.
DecoratedAlgebra decorate(Algebra a, Mat u, Mat v, double tol = kDefaultTol);

/// Involution fixing U pointwise and negating V.
Mat kappa(const DecoratedAlgebra& x);

/// (A_{kappa^i, kappa^j}, U, V).
DecoratedAlgebra functor_I(int i, int j, const DecoratedAlgebra& x);

inline const Algebra& forget(const DecoratedAlgebra& x) { return x.alg(); }

/// Image of x under an isomorphism f: (transport(A, f), f U, f V).
DecoratedAlgebra transport(const DecoratedAlgebra& x, const Mat& f);

/// Random splitting with [U|V] well conditioned; m must be odd and below dim.
DecoratedAlgebra random_decoration(const Algebra& a, int m, Rng& rng);

}  // namespace dsign

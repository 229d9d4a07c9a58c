#pragma once

#include <array>

#include "dsign/algebra.hpp"

namespace dsign {

/// Hamilton quaternion w + x i + y j + z k.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(double w, double x, double y, double z) : q_{w, x, y, z} {}
  explicit Quaternion(const Vec& v);

  double operator[](int i) const { return q_[i]; }
  Vec vec() const;
  double norm() const;
  Quaternion conj() const { return {q_[0], -q_[1], -q_[2], -q_[3]}; }
  /// Throws ZeroQuaternion for 0.
  Quaternion inverse() const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator*(double s) const { return {q_[0] * s, q_[1] * s, q_[2] * s, q_[3] * s}; }
  Quaternion operator-() const { return *this * -1.0; }

  /// Coset representative of [q] in H*/R*: norm one, first nonzero coordinate positive.
  Quaternion representative() const;

 private:
  std::array<double, 4> q_{1.0, 0.0, 0.0, 0.0};
};

Quaternion random_unit_quaternion(Rng& rng);

Mat quat_left(const Quaternion& q);   // x -> q x
Mat quat_right(const Quaternion& q);  // x -> x q

/// Matrix of x -> s x s^-1 (orthogonal, fixes the real axis).
Mat k_map(const Quaternion& s);

/// Quaternion conjugation, obtained as kappa of (H, R 1, Im H).
const Mat& quaternion_kappa();

/// Object ([a], [b], (C, D)) of the action groupoid Z.
struct ZObject {
  Quaternion a;
  Quaternion b;
  Mat c = Mat::Identity(4, 4);
  Mat d = Mat::Identity(4, 4);
};

/// Normalises a, b to representatives and checks C, D are SPD of determinant one.
ZObject make_zobject(const Quaternion& a, const Quaternion& b, const Mat& c, const Mat& d, double tol = kDefaultTol);
ZObject random_zobject(Rng& rng, bool y_object = false);
double zobject_distance(const ZObject& x, const ZObject& y);

/// [s] . x = ([K_s a], [K_s b], (K_s C K_s^-1, K_s D K_s^-1)).
ZObject z_action(const Quaternion& s, const ZObject& x);

/// The isotope H_{sigma, tau} attached to x in block (alpha, beta).
Algebra functor_H(Sign alpha, Sign beta, const ZObject& x);
std::pair<Mat, Mat> functor_H_operators(Sign alpha, Sign beta, const ZObject& x);

/// Image of the morphism [s] : x -> [s].x. Equal to K_s unless taking
/// representatives flips the sign of exactly one of a, b, in which case -K_s.
Mat functor_H_morphism(const Quaternion& s, const ZObject& x);

struct Isoclinic {
  Quaternion a;  // unit, representative convention
  Quaternion b;  // unit, sign tied to a
  double residual = 0.0;
};

/// Writes O in SO(4) as x -> a x b.
Isoclinic so4_factor(const Mat& o);

struct QuatNormalForm {
  Sign alpha = Sign::Plus;
  Sign beta = Sign::Plus;
  ZObject x;
  Mat iso;           // isomorphism H_{S,T} -> functor_H(alpha, beta, x)
  double residual = 0.0;
};

QuatNormalForm quat_normal_form(const Mat& s, const Mat& t, double tol = kDefaultTol);

}  // namespace dsign

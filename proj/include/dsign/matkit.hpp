#pragma once

// Small dense real-matrix substrate shared by every other module. Matrices
// here have side 1, 2, 4 or 8; Eigen does the heavy lifting.

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace dsign {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

enum class Sign : int { Minus = -1, Plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
  return to_int(a) * to_int(b) > 0 ? Sign::Plus : Sign::Minus;
}
constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Seeded generator. Uniform variates are built from raw mt19937_64 bits so
/// sample streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int index(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  Vec uniform_vec(int n, double lo = -1.0, double hi = 1.0);
  Mat uniform_mat(int rows, int cols, double lo = -1.0, double hi = 1.0);
  /// Uniform on the unit sphere (rejection from the cube).
  Vec unit_vec(int n);

 private:
  std::mt19937_64 engine_;
};

/// LU determinant with partial pivoting.
double det(const Mat& m);

/// Sign of det(m). Throws DegenerateSign when |det(m)| <= tol.
Sign sign_det(const Mat& m, double tol = kDefaultTol);

struct Polar {
  Mat spd;         // symmetric positive definite factor P
  Mat orthogonal;  // orthogonal factor O, with M = P * O
};

/// Left polar decomposition M = P O via SVD. Throws SingularInput when the
/// smallest singular value is below rel_tol times the largest.
Polar polar_decompose(const Mat& m, double rel_tol = 1e-13);

/// Symmetric within tol, eigenvalues above tol, |det - 1| <= tol.
bool is_spd1(const Mat& m, double tol = kDefaultTol);

/// Seeded SPD matrix of determinant one: W W^t + eps I rescaled by det^(-1/n).
Mat random_spd1(int n, std::uint64_t seed);
Mat random_spd1(int n, Rng& rng);

/// Symmetrises and rescales an (almost) SPD matrix to determinant one.
Mat clean_spd1(const Mat& m);

double max_abs(const Mat& m);

}  // namespace dsign

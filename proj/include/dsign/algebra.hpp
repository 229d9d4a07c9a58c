#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsign/matkit.hpp"

namespace dsign {

/// Finite-dimensional real algebra given by structure constants:
/// e_i e_j = sum_k c(i, j, k) e_k, left factor index first.
class Algebra {
 public:
  Algebra(int dim, std::vector<double> structure, std::string label = {});

  /// Algebra with multiplication table given by products(i, j) = e_i e_j.
  template <class F>
  static Algebra from_products(int dim, F&& products, std::string label = {}) {
    std::vector<double> c(static_cast<std::size_t>(dim) * dim * dim, 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const Vec p = products(i, j);
        for (int k = 0; k < dim; ++k) c[(static_cast<std::size_t>(i) * dim + j) * dim + k] = p(k);
      }
    return Algebra(dim, std::move(c), std::move(label));
  }

  int dim() const { return dim_; }
  double c(int i, int j, int k) const {
    return structure_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<double>& structure() const { return structure_; }
  const std::string& label() const { return label_; }
  Algebra relabel(std::string label) const;

  /// The product x y.
  Vec mul(const Vec& x, const Vec& y) const;
  /// The basis product e_i e_j.
  Vec product(int i, int j) const;

 private:
  int dim_;
  std::vector<double> structure_;
  std::string label_;
};

/// Largest entrywise difference between two structure tensors of equal dimension.
double tensor_distance(const Algebra& a, const Algebra& b);

struct SignPair {
  Sign ell = Sign::Plus;
  Sign r = Sign::Plus;

  friend bool operator==(const SignPair&, const SignPair&) = default;
  /// Block label: "++", "+-", "-+" or "--".
  std::string label() const { return {to_char(ell), to_char(r)}; }
};

SignPair parse_block(std::string_view label);

Mat left_mult(const Algebra& a, const Vec& x);
Mat right_mult(const Algebra& a, const Vec& x);

struct SignOptions {
  int samples = 1000;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
};

/// Double sign (sign det L_a, sign det R_a), evaluated on every basis vector and
/// `samples` seeded random points; any disagreement throws SignInconsistent.
SignPair sign_pair(const Algebra& a, const SignOptions& opt = {});
std::string block_of(const Algebra& a, const SignOptions& opt = {});

/// Isotope with multiplication x o y = (S x)(T y).
Algebra isotope(const Algebra& a, const Mat& s, const Mat& t, double tol = kDefaultTol);
Algebra opposite(const Algebra& a);
/// Copy of `a` carried along f: x . y = f(f^-1 x f^-1 y), so f : a -> result is an isomorphism.
Algebra transport(const Algebra& a, const Mat& f, double tol = kDefaultTol);

/// max_ij |f(e_i e_j) - f(e_i) f(e_j)| divided by max(1, max_ij |f(e_i e_j)|).
double morphism_residual(const Mat& f, const Algebra& a, const Algebra& b);
bool is_morphism(const Mat& f, const Algebra& a, const Algebra& b, double tol = kDefaultTol);

enum class DivisionMode { Exact2d, Sampled };
enum class DivisionVerdict { Division, NotDivision, ProbablyDivision };
std::string_view to_string(DivisionVerdict v);

struct DivisionReport {
  DivisionVerdict verdict = DivisionVerdict::NotDivision;
  /// Sampled mode: smallest |det| seen. Exact mode: smallest |eigenvalue| of the two forms.
  double margin = 0.0;
};

DivisionReport is_division(const Algebra& a, DivisionMode mode, int samples = 1000,
                           double tol = kDefaultTol, std::uint64_t seed = 0);

struct Unities {
  std::optional<Vec> left;
  std::optional<Vec> right;
  std::optional<Vec> two_sided;
};

Unities find_unities(const Algebra& a, double tol = kDefaultTol);

/// Orthonormal basis (columns) of {z : z x = x z for all x}.
Mat center(const Algebra& a, double tol = kDefaultTol);
/// Orthonormal basis of the nucleus-and-commutant subspace: commuting elements
/// all of whose associators with basis pairs vanish.
Mat associative_center(const Algebra& a, double tol = kDefaultTol);

enum class Classical { C, H, O };
Classical parse_classical(std::string_view name);
Algebra classical(Classical which);
inline Algebra classical(std::string_view name) { return classical(parse_classical(name)); }

/// Basis vector e_i of length n.
Vec basis_vec(int n, int i);

}  // namespace dsign

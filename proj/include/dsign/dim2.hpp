#pragma once

#include <string>
#include <vector>

#include "dsign/algebra.hpp"

namespace dsign {

/// C_{A K^i, B K^j} for (i, j) != (1, 1), C_{K A, K B} for (1, 1); A, B are
/// 2x2 SPD with determinant one. Its block is ((-1)^j, (-1)^i).
struct NormalForm2D {
  int i = 0;
  int j = 0;
  Mat a = Mat::Identity(2, 2);
  Mat b = Mat::Identity(2, 2);

  SignPair block() const;
};

enum class Group2D { C2, D3 };
std::string_view to_string(Group2D g);

struct GroupElement2D {
  Group2D group = Group2D::C2;
  std::string name;  // I, K, R, R2, RK, R2K
  Mat matrix;
};

/// Complex conjugation [[1,0],[0,-1]].
Mat conjugation_matrix();
/// Rotation of the complex plane by 2 pi / 3.
Mat rotation_matrix();
std::vector<GroupElement2D> group_elements(Group2D g);

/// The group acting on the hom-sets of the block (i, j): D3 for (1,1), else C2.
Group2D group_of_block(int i, int j);

Algebra build2d(const NormalForm2D& nf, double tol = kDefaultTol);

struct SpdPair {
  Mat a;
  Mat b;
};

/// {g in G : (g A g^t, g B g^t) = y} for x = (A, B).
std::vector<GroupElement2D> groupoid_hom(Group2D g, const SpdPair& x, const SpdPair& y, double tol = kDefaultTol);

/// Morphisms build2d(src) -> build2d(dst). Throws BlockMismatch for different blocks.
std::vector<GroupElement2D> hom2d(const NormalForm2D& src, const NormalForm2D& dst, double tol = kDefaultTol);

struct Unitalized {
  Algebra alg;
  Vec unity;
};

/// A_{R_a^-1, L_a^-1}, whose unity is a a (product taken in A).
Unitalized unitalize(const Algebra& a, const Vec& x, double tol = kDefaultTol);

/// Isomorphism from a unital 2-d division algebra onto C sending u to 1.
Mat iso_to_C(const Algebra& b, const Vec& u, double tol = kDefaultTol);

struct Classified2D {
  NormalForm2D nf;
  Mat iso;          // morphism A -> build2d(nf)
  double residual;  // relative morphism residual of iso
};

/// Reduces a 2-d division algebra to normal form; the returned isomorphism is
/// verified before returning.
Classified2D normal_form_2d(const Algebra& a, double tol = kDefaultTol);

}  // namespace dsign

#pragma once

#include "spherepair/classone.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace spherepair {

// Quaternion w + x i + y j + z k. Complex numbers use (w, x) only; reals use w.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat() = default;
  Quat(double w_, double x_ = 0, double y_ = 0, double z_ = 0) : w(w_), x(x_), y(y_), z(z_) {}
  Quat conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
};
Quat operator+(const Quat& a, const Quat& b);
Quat operator-(const Quat& a, const Quat& b);
Quat operator-(const Quat& a);
Quat operator*(const Quat& a, const Quat& b);
Quat operator*(double s, const Quat& a);
inline bool operator==(const Quat& a, const Quat& b) { return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z; }

// Dense n x n matrix over R, C or H. Elements of so(n), u(n), sp(n) and of the groups
// SO(n), U(n), Sp(n) share this type.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Field f, int n);
  static AlgebraElement identity(Field f, int n);

  Field field() const { return field_; }
  int n() const { return n_; }
  Quat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Quat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  AlgebraElement conj_transpose() const;
  // X + conj(X)^T == 0 within tol
  bool is_skew(double tol = 0) const;
  bool is_zero(double tol = 0) const;
  double max_abs() const;
  // real matrix of the action on R^n, C^n = R^2n or H^n = R^4n (left multiplication)
  Eigen::MatrixXd realify() const;
  // top-left block of size k or the block starting at (s, s) of size k
  AlgebraElement block(int s, int k) const;
  // embed this matrix at (s, s) inside an N x N zero matrix
  AlgebraElement embedded(int N, int s) const;
  std::string str() const;

 private:
  Field field_ = Field::R;
  int n_ = 0;
  std::vector<Quat> a_;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(double s, const AlgebraElement& a);
// matrix product (throws std::invalid_argument on shape or field mismatch)
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
bool operator==(const AlgebraElement& a, const AlgebraElement& b);
// same entries read over a larger field (R -> C -> H)
AlgebraElement as_field(const AlgebraElement& a, Field f);

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y);
// Q = -1/2 Re Tr(XY)
double innerQ(const AlgebraElement& X, const AlgebraElement& Y);
inline double normQ2(const AlgebraElement& X) { return innerQ(X, X); }

// E_ij (i < j): +1 at (i,j), -1 at (j,i). F_ij: i at (i,j) and (j,i), sqrt2 i on the diagonal.
// theta G_ij: theta at (i,j) and (j,i), sqrt2 theta on the diagonal. Indices are 0-based.
AlgebraElement basis_E(Field f, int n, int i, int j);
AlgebraElement basis_F(int n, int i, int j);
AlgebraElement basis_G(int n, int i, int j, int theta);  // theta 1, 2, 3 for i, j, k

// so(n): E_ij; u(n): E_ij then F_ij (i <= j); sp(n): E_ij then for each i <= j, iG, jG, kG.
std::vector<AlgebraElement> build_algebra_basis(Field f, int n);
// dimension n(n-1)/2, n^2 or n(2n+1)
int algebra_dim(Field f, int n);

// Gram-Schmidt under Q; vectors with residual norm below tol are dropped
std::vector<AlgebraElement> orthonormalize(const std::vector<AlgebraElement>& v, double tol = 1e-10);
// components along an orthonormal family
Eigen::VectorXd coords(const std::vector<AlgebraElement>& onb, const AlgebraElement& X);
AlgebraElement combine(const std::vector<AlgebraElement>& onb, const Eigen::VectorXd& c, Field f, int n);
// orthogonal projection onto the span of an orthonormal family
AlgebraElement project(const std::vector<AlgebraElement>& onb, const AlgebraElement& X);

// A representation mu of K' into so(l), u(l) or sp(l) given on a basis of k'.
struct EmbeddedRep {
  std::string source;              // "SO(3)/SO(2)"
  std::string label;               // "2w1"
  Field field = Field::R;
  int l = 0;                       // degree over the field
  int m0 = 1;                      // number of trailing H'-fixed basis directions
  RepType type = RepType::Real;
  std::vector<AlgebraElement> k_basis;     // basis of k' (source matrices)
  std::vector<AlgebraElement> images;      // mu_* of k_basis
  std::vector<AlgebraElement> h_basis;     // basis of h' (source matrices)
  std::vector<AlgebraElement> h_images;    // mu_* of h_basis
  AlgebraElement weyl_x;                   // mu(x) for x in N(H') \ H' with x^2 in H'
};

// Homogeneous harmonic polynomials of degree a in x, y, z with SO(3) acting by
// (A.f)(v) = f(A^-1 v). Basis: Re/Im (x+iy)^j times the zonal factor for j = a..1, then the
// SO(2)-invariant (zonal) polynomial last. Orthonormal for the Fischer product.
EmbeddedRep harmonic_so3_embedding(int a);
// the same matrices viewed in u(l)
EmbeddedRep complexify(const EmbeddedRep& r);
// Sp(1) on S^3(C^2) = H^2 (highest weight 3w1), H' = {1}
EmbeddedRep sp1_cubic_embedding();
// mu(A) for A in SO(3) on the harmonic basis of degree a
AlgebraElement harmonic_so3_group(int a, const Eigen::Matrix3d& A);

// largest |[mu(x),mu(y)] - mu([x,y])| over basis pairs (bracket of sources re-expanded in k_basis)
double homomorphism_defect(const EmbeddedRep& r);

struct DiagramSubspaces {
  Field field = Field::R;
  int n = 0, m = 0, r = 0, l = 0, alpha = 1;
  std::vector<AlgebraElement> g;        // basis of the ambient algebra
  std::vector<AlgebraElement> h;        // rho(h') + g(n-m) (lower block)
  std::vector<AlgebraElement> p;        // orthogonal complement of h: (g(m) - rho(h')) then q
  int q_offset = 0;                     // first q vector inside p
  std::vector<AlgebraElement> k_minus;  // rho(k') + g(n-m)
  std::vector<AlgebraElement> k_plus;   // rho(h') + g(n-m+1) starting at row m-1
  std::vector<AlgebraElement> q0;
  std::vector<std::vector<AlgebraElement>> q;  // q_1 .. q_alpha
  std::vector<AlgebraElement> n1, n2;
  std::vector<AlgebraElement> rho_k;    // rho_* of the k' basis, n x n
  std::vector<AlgebraElement> rho_h;
};

// Block embedding tau + mu + ... + mu in the upper-left m x m block of G = SO(n), U(n), Sp(n).
// Throws std::invalid_argument when degrees disagree with the candidate.
DiagramSubspaces diagram_subspaces(const DiagramCandidate& c, const EmbeddedRep& mu,
                                   const EmbeddedRep* tau = nullptr);

}  // namespace spherepair

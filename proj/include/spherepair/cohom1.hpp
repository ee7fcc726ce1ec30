#pragma once

#include "spherepair/liealg.hpp"

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace spherepair {

// Even profile h with h(0) = 1 and h(L) = 0, given with two derivatives.
struct Profile {
  std::string name;
  double L = 1;
  std::function<double(double)> h, dh, d2h;
  std::function<double(double)> one_minus_h;  // cancellation-free 1 - h near t = 0
};
// "cos": cos(pi t / 2L); "quartic": (1 - (t/L)^2)^2. Unknown names throw UnknownSelector.
Profile make_profile(const std::string& name, double L = 1);
std::vector<std::string> profile_names();

// A registered cohomogeneity one diagram H in {K-, K+} in G together with its embedding.
struct GroupDiagram {
  std::string name;
  std::string summary;
  DiagramCandidate candidate;
  EmbeddedRep mu;
  DiagramSubspaces sub;
  Eigen::MatrixXd default_F;  // beta x beta, f_{beta,beta} = 1
  int p = 0;                  // rows per block
  int beta = 1;               // number of blocks of p rows
};

// "so3-l5-n7", "so3-l5-a2-n13", "so3-l3-n5-c", "sp1-l2-n4-h"
std::vector<std::string> example_names();
std::shared_ptr<const GroupDiagram> make_example(const std::string& name);

struct MetricFamily {
  std::shared_ptr<const GroupDiagram> diagram;
  Eigen::MatrixXd F;
  Profile profile;
  Eigen::MatrixXd A;  // F = A D A^T, A orthogonal
  Eigen::VectorXd D;
  int i0 = 0;         // first column with A(beta-1, i0) != 0
};
// Validates F (size, symmetry, positive definiteness, f_{beta,beta} = 1, companion identities
// for blocks coming from a complex or quaternionic mu) and diagonalizes it.
MetricFamily make_family(std::shared_ptr<const GroupDiagram> d, const Eigen::MatrixXd& F, Profile h);
MetricFamily default_family(std::shared_ptr<const GroupDiagram> d, const std::string& profile = "cos");

// P_t on p: acts on the rows of the upper-right m x (n-m) block through F and p_ij(t),
// identity on the rest of p.
class MetricOperator {
 public:
  // throws std::domain_error when p(t) is not positive definite
  MetricOperator(const MetricFamily& fam, double t);
  AlgebraElement P(const AlgebraElement& X) const;
  AlgebraElement dP(const AlgebraElement& X) const;
  AlgebraElement d2P(const AlgebraElement& X) const;
  AlgebraElement Pinv(const AlgebraElement& X) const;
  // -1/2 P^-1 P'
  AlgebraElement shape(const AlgebraElement& X) const;
  // p_ij(t), the block acting on the last row of each block
  const Eigen::MatrixXd& last_row_block() const { return Mp_; }
  double t() const { return t_; }

 private:
  enum class Which { P, dP, d2P, Pinv };
  AlgebraElement apply(const AlgebraElement& X, Which w) const;
  const GroupDiagram* d_;
  double t_;
  Eigen::MatrixXd F_, Finv_, Mp_, Mpinv_, dM_, d2M_;
};

MetricOperator metric_operator(const MetricFamily& fam, double t);

struct APair {
  AlgebraElement plus, minus;
};
// A+- = 1/2([X, PY] -+ [PX, Y])
APair a_pm(const MetricOperator& P, const AlgebraElement& X, const AlgebraElement& Y);

struct CurvatureTerms {
  double a = 0;  // g(R(X,Y)X,Y)
  double b = 0;  // g(R(X,Y)T,Y)
  double c = 0;  // g(R(X,T)X,T)
  double norm2 = 0;  // |X* ^ Y*|^2 in g_t
  double a_plus_h_residual = 0;  // |A+(X,Y)_h| + |A+(X,X)_h| + |A+(Y,Y)_h|
};
// The components along h are dropped before P^-1 is applied; their size is reported.
CurvatureTerms curvature_components(const MetricOperator& P, const DiagramSubspaces& s, const AlgebraElement& X,
                                    const AlgebraElement& Y);
// same formulas with P = Id for an arbitrary splitting g = h + p
double curvature_a_biinvariant(const std::vector<AlgebraElement>& p_basis, const AlgebraElement& X,
                               const AlgebraElement& Y);

struct WitnessPlane {
  AlgebraElement X, Y, X0;
  Eigen::VectorXd b;                 // real coefficients b_a, a < p
  std::vector<Quat> c;               // complex (w = 0, x) or pure quaternion coefficients
  Quat c_last;                       // coefficient on the last row: 1 (R), 1 + i (C), 1 + i + j + k (H)
  double dA = 1;                     // d_{i0} A_beta (real case), 1 otherwise
  double product_scale = 1;          // expected product term is -product_scale (h h')^2
  int null_dim = 0;
  bool commutes_exactly = false;     // [X, Y] == 0 entrywise
  double x0_kminus_residual = 0;     // max |Q(X0, k-)|
};
// throws InternalInconsistency when the linear conditions only admit b = 0
WitnessPlane build_witness(const MetricFamily& fam);

struct CurvatureSample {
  double t = 0;
  double r1 = 0;  // |A+(X,Y) - (h^2-1) X0|
  double r2 = 0;  // |A+(X,X) - A+(Y,Y)|
  double r3 = 0;  // |Q(P'X, Y)|
  double r4 = 0;  // |-1/4 Q(P'X,X) Q(P'Y,Y) - expected|
  double product = 0;
  double formula_a = 0, three_term = 0, decomposition_rel = 0;
  double sec = 0;
};
struct CurvatureReport {
  std::string example, profile;
  double tol_identity = 1e-9, tol_decomposition = 1e-9;
  bool commutes_exactly = false;
  std::vector<CurvatureSample> samples;
  bool identities_ok() const;
  bool decomposition_ok() const;
  // smallest sampled t with sec < 0, or a negative value when none
  double first_negative_t() const;
};
CurvatureReport verify_witness_identities(const MetricFamily& fam, const WitnessPlane& w,
                                          const std::vector<double>& t_samples);
// n equally spaced points strictly inside (0, L)
std::vector<double> interior_samples(double L, int n);

struct WeylRepresentatives {
  AlgebraElement w_plus, w_minus;
  bool w_plus_sq_in_H = false, w_minus_sq_in_H = false;
  bool w_plus_notin_H = false, w_minus_notin_H = false;
  bool commute = false, product_notin_H = false;
  bool all() const {
    return w_plus_sq_in_H && w_minus_sq_in_H && w_plus_notin_H && w_minus_notin_H && commute && product_notin_H;
  }
};
// w+ = diag(I_{m-1}, -1, -1, I_{n-m-1}) over R, diag(I_{m-1}, -1, I_{n-m}) over C and H;
// w- = diag(mu(x), ..., mu(x), I_{n-m}). Throws std::invalid_argument when tau is present.
WeylRepresentatives weyl_representatives(const GroupDiagram& d);
// g in H = rho(H') x G(n-m), up to 1e-9 on the rho(H') factor
bool in_H(const GroupDiagram& d, const AlgebraElement& g);

struct EvenFunction {
  std::function<double(double)> f, df;
};
EvenFunction one_minus_h2(const Profile& p);
struct ObstructionHit {
  double gamma = 0, t = 0, lhs = 0;  // lhs = gamma^2 f^2 - f'^2 < 0
  bool found = false;
};
// Throws std::invalid_argument unless f(0) = 0, f is even and non-constant on t_grid.
std::vector<ObstructionHit> obstruction_scan(const EvenFunction& f, const std::vector<double>& gamma_grid,
                                             const std::vector<double>& t_grid, int max_halvings = 200);
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace spherepair

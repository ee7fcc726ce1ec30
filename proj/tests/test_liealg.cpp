#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherepair/liealg.hpp"

#include <cmath>
#include <random>

using namespace spherepair;

namespace {

double gram_defect(const std::vector<AlgebraElement>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      worst = std::max(worst, std::abs(innerQ(b[i], b[j]) - (i == j ? 1.0 : 0.0)));
  return worst;
}

bool in_span(const std::vector<AlgebraElement>& onb, const AlgebraElement& X, double tol) {
  return (X - project(onb, X)).max_abs() <= tol;
}

}  // namespace

TEST_CASE("algebra bases are Q-orthonormal with the expected sizes") {
  for (int n = 2; n <= 5; ++n) {
    for (Field f : {Field::R, Field::C, Field::H}) {
      const auto b = build_algebra_basis(f, n);
      CHECK(static_cast<int>(b.size()) == algebra_dim(f, n));
      for (const auto& X : b) CHECK(X.is_skew());
      CHECK(gram_defect(b) <= 1e-15);
    }
    // integer entries: exactly orthonormal
    CHECK(gram_defect(build_algebra_basis(Field::R, n)) == 0);
  }
  const auto u2 = build_algebra_basis(Field::C, 2);
  REQUIRE(u2.size() == 4);
  CHECK(u2[0] == basis_E(Field::C, 2, 0, 1));
  CHECK(u2[1] == basis_F(2, 0, 0));
  CHECK(u2[2] == basis_F(2, 0, 1));
  CHECK(u2[3] == basis_F(2, 1, 1));
  const auto sp1 = build_algebra_basis(Field::H, 1);
  REQUIRE(sp1.size() == 3);
  for (const auto& X : sp1) CHECK(std::abs(normQ2(X) - 1) <= 1e-15);
  CHECK(std::abs(sp1[0](0, 0).x - std::sqrt(2.0)) == 0);
}

TEST_CASE("brackets and Q on so(3)") {
  const auto E12 = basis_E(Field::R, 3, 0, 1), E23 = basis_E(Field::R, 3, 1, 2), E13 = basis_E(Field::R, 3, 0, 2);
  CHECK(bracket(E12, E23) == E13);
  CHECK(innerQ(E12, E13) == 0);
  CHECK(innerQ(E12, E12) == 1);
  CHECK(bracket(E12, E23) == -1.0 * bracket(E23, E12));
  CHECK_THROWS_AS(innerQ(E12, basis_E(Field::R, 4, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(bracket(E12, as_field(E12, Field::C)), std::invalid_argument);
}

TEST_CASE("Jacobi identity and ad-invariance") {
  std::mt19937 rng(7);
  for (Field f : {Field::R, Field::C, Field::H}) {
    const auto b = build_algebra_basis(f, 4);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const auto &X = b[pick(rng)], &Y = b[pick(rng)], &Z = b[pick(rng)];
      const auto jac = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
      const double adinv = innerQ(bracket(X, Y), Z) + innerQ(Y, bracket(X, Z));
      if (f == Field::R) {
        CHECK(jac.is_zero());
        CHECK(adinv == 0);
      } else {
        CHECK(jac.is_zero(1e-12));
        CHECK(std::abs(adinv) <= 1e-12);
      }
    }
  }
}

TEST_CASE("harmonic SO(3) models") {
  const auto h1 = harmonic_so3_embedding(1);
  CHECK(h1.l == 3);
  // H_1 is the defining representation on (x, y, z)
  for (std::size_t s = 0; s < 3; ++s) CHECK((h1.images[s] - h1.k_basis[s]).max_abs() <= 1e-15);

  for (int a = 1; a <= 4; ++a) {
    const auto h = harmonic_so3_embedding(a);
    CHECK(h.l == 2 * a + 1);
    CHECK(homomorphism_defect(h) <= 1e-12);
    for (const auto& X : h.images) CHECK(X.is_skew(1e-14));
    // SO(2) fixes exactly the last direction
    const auto& Z = h.h_images[0];
    for (int i = 0; i < h.l; ++i) CHECK(Z(i, h.l - 1).is_zero());
    for (int j = 0; j + 1 < h.l; ++j) {
      double col = 0;
      for (int i = 0; i < h.l; ++i) col += Z(i, j).norm2();
      CHECK(col > 0.5);
    }
    // Schur: the image Gram matrix is a constant multiple of the source Gram matrix
    const double ratio = normQ2(h.images[0]);
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t t = 0; t < 3; ++t)
        CHECK(std::abs(innerQ(h.images[s], h.images[t]) - ratio * innerQ(h.k_basis[s], h.k_basis[t])) <= 1e-12);
    // the Weyl element is an involution; the zonal polynomial has parity (-1)^a in z
    const auto w = h.weyl_x;
    CHECK((w * w - AlgebraElement::identity(Field::R, h.l)).is_zero(1e-12));
    CHECK(std::abs(w(h.l - 1, h.l - 1).w - (a % 2 ? -1 : 1)) <= 1e-12);
  }
  const auto h2 = harmonic_so3_embedding(2);
  // x = diag(1,-1,-1) on (x^2-y^2, xy, xz, yz, zonal)
  const double expect[5] = {1, -1, -1, 1, 1};
  for (int i = 0; i < 5; ++i) CHECK(h2.weyl_x(i, i).w == doctest::Approx(expect[i]));
  CHECK_THROWS_AS(harmonic_so3_embedding(0), std::invalid_argument);
}

TEST_CASE("harmonic group action matches the algebra") {
  // mu(exp(sX)) ~ I + s mu_*(X)
  const double s = 1e-6;
  for (int a = 1; a <= 3; ++a) {
    const auto h = harmonic_so3_embedding(a);
    for (std::size_t k = 0; k < 3; ++k) {
      Eigen::Matrix3d X = h.k_basis[k].realify();
      Eigen::Matrix3d R = Eigen::Matrix3d::Identity() + s * X + 0.5 * s * s * X * X;
      const auto g = harmonic_so3_group(a, R);
      const auto lin = (1.0 / s) * (g - AlgebraElement::identity(Field::R, h.l));
      CHECK((lin - h.images[k]).max_abs() <= 1e-5);
    }
  }
}

TEST_CASE("Sp(1) on S^3(C^2) as a quaternionic 2-dimensional representation") {
  const auto r = sp1_cubic_embedding();
  CHECK(r.l == 2);
  CHECK(r.field == Field::H);
  CHECK(homomorphism_defect(r) <= 1e-12);
  for (const auto& X : r.images) CHECK(X.is_skew(1e-12));
  CHECK((r.weyl_x + AlgebraElement::identity(Field::H, 2)).is_zero(1e-12));
  // irreducible of dimension 4: the Casimir is a scalar, -15/4 times |X|^2 = 2 normalisation
  Eigen::MatrixXd cas = Eigen::MatrixXd::Zero(8, 8);
  for (const auto& X : r.images) cas += X.realify() * X.realify();
  CHECK((cas - cas(0, 0) * Eigen::MatrixXd::Identity(8, 8)).norm() <= 1e-10);
}

TEST_CASE("diagram subspaces for SO(3), 2w1, n = 7") {
  DiagramCandidate c;
  c.mu = make_record(parse_pair("so:3"), {2, 0, 0});
  c.n = 7;
  const auto mu = harmonic_so3_embedding(2);
  const auto s = diagram_subspaces(c, mu);
  CHECK(s.m == 5);
  CHECK(s.g.size() == 21);
  CHECK(s.h.size() == 2);
  CHECK(s.p.size() == 19);
  CHECK(s.q0.empty());
  REQUIRE(s.q.size() == 1);
  CHECK(s.q[0].size() == 10);
  CHECK(s.n2.size() == 2);
  CHECK(s.n2[0] == basis_E(Field::R, 7, 4, 5));
  CHECK(s.n2[1] == basis_E(Field::R, 7, 4, 6));
  CHECK(s.n1.size() == 8);
  CHECK(s.k_minus.size() == 4);
  CHECK(s.k_plus.size() == 1 + 3);
  CHECK(gram_defect(s.p) <= 1e-12);
  CHECK(gram_defect(s.h) <= 1e-12);
  for (const auto& X : s.p)
    for (const auto& Z : s.h) CHECK(std::abs(innerQ(X, Z)) <= 1e-12);
  // q is Ad_H-invariant
  for (const auto& Z : s.h)
    for (const auto& X : s.q[0]) CHECK(in_span(s.q[0], bracket(Z, X), 1e-12));
  // h sits inside both k- and k+
  for (const auto& Z : s.h) {
    CHECK(in_span(s.k_minus, Z, 1e-12));
    CHECK(in_span(s.k_plus, Z, 1e-12));
  }
  CHECK(in_span(s.k_plus, basis_E(Field::R, 7, 4, 5), 0));

  c.n = 5;
  CHECK_THROWS_AS(diagram_subspaces(c, mu), std::invalid_argument);
  c.n = 7;
  CHECK_THROWS_AS(diagram_subspaces(c, harmonic_so3_embedding(1)), std::invalid_argument);
}

TEST_CASE("diagram subspaces over C and H") {
  DiagramCandidate c;
  c.field = Field::C;
  c.mu = make_record(parse_pair("so:3"), {1, 0, 0});
  c.n = 5;
  const auto s = diagram_subspaces(c, complexify(harmonic_so3_embedding(1)));
  CHECK(s.m == 3);
  CHECK(s.g.size() == 25);
  CHECK(s.h.size() == 1 + 4);
  CHECK(s.p.size() == 20);
  CHECK(s.q[0].size() == 12);
  for (const auto& Z : s.h)
    for (const auto& X : s.q[0]) CHECK(in_span(s.q[0], bracket(Z, X), 1e-12));

  DiagramCandidate d;
  d.field = Field::H;
  d.mu = make_record(parse_pair("sp:1"), {3, 0, 0});
  d.n = 4;
  const auto t = diagram_subspaces(d, sp1_cubic_embedding());
  CHECK(t.m == 2);
  CHECK(t.g.size() == 36);
  CHECK(t.h.size() == 10);
  CHECK(t.p.size() == 26);
  CHECK(t.q[0].size() == 16);
  CHECK(t.k_minus.size() == 13);
  CHECK(t.k_plus.size() == 21);
  CHECK(gram_defect(t.p) <= 1e-12);
  for (const auto& Z : t.h)
    for (const auto& X : t.q[0]) CHECK(in_span(t.q[0], bracket(Z, X), 1e-12));
}

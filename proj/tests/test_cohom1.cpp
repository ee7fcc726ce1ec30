#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherepair/cohom1.hpp"
#include "spherepair/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace spherepair;

namespace {

AlgebraElement random_in(const std::vector<AlgebraElement>& basis, std::mt19937& rng) {
  std::normal_distribution<double> N;
  AlgebraElement X(basis[0].field(), basis[0].n());
  for (const auto& b : basis) X = X + N(rng) * b;
  return X;
}

}  // namespace

TEST_CASE("profiles are even with h(0) = 1, h(L) = 0 and consistent derivatives") {
  for (const auto& name : profile_names()) {
    const auto p = make_profile(name, 1.5);
    CHECK(p.h(0) == 1);
    CHECK(std::abs(p.h(p.L)) <= 1e-15);
    for (double t : {0.1, 0.4, 0.9, 1.3}) {
      CHECK(p.h(t) == doctest::Approx(p.h(-t)));
      const double e = 1e-5;
      CHECK(p.dh(t) == doctest::Approx((p.h(t + e) - p.h(t - e)) / (2 * e)).epsilon(1e-8));
      CHECK(p.d2h(t) == doctest::Approx((p.dh(t + e) - p.dh(t - e)) / (2 * e)).epsilon(1e-8));
      CHECK(p.one_minus_h(t) == doctest::Approx(1 - p.h(t)));
    }
  }
  CHECK_THROWS_AS(make_profile("sine"), UnknownSelector);
  CHECK_THROWS_AS(make_profile("cos", 0), std::invalid_argument);
}

TEST_CASE("registered examples") {
  for (const auto& name : example_names()) {
    const auto d = make_example(name);
    CHECK(d->name == name);
    CHECK(d->default_F(d->beta - 1, d->beta - 1) == doctest::Approx(1));
    CHECK(d->p * d->beta == d->sub.alpha * d->sub.l);
  }
  CHECK_THROWS_AS(make_example("so3-l7"), UnknownSelector);
  const auto flag = make_example("so3-l5-n7");
  CHECK(flag->sub.m == 5);
  CHECK(flag->sub.n == 7);
  CHECK(flag->p == 5);
  CHECK(flag->beta == 1);
  const auto two = make_example("so3-l5-a2-n13");
  CHECK(two->beta == 2);
  CHECK(two->default_F(0, 1) == doctest::Approx(0.1 / 1.1));
}

TEST_CASE("metric family validation") {
  const auto d = make_example("so3-l5-a2-n13");
  const auto cosp = make_profile("cos");
  Eigen::MatrixXd F(2, 2);
  F << 2, 0.5, 0.5, 1;
  const auto fam = make_family(d, F, cosp);
  CHECK((fam.A * fam.D.asDiagonal() * fam.A.transpose() - F).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(std::abs(fam.A(1, fam.i0)) > 0);
  Eigen::MatrixXd bad = F;
  bad(0, 1) = 0.3;
  CHECK_THROWS_AS(make_family(d, bad, cosp), std::invalid_argument);
  bad = F;
  bad(1, 1) = 2;
  CHECK_THROWS_AS(make_family(d, bad, cosp), std::invalid_argument);
  bad << 1, 2, 2, 1;
  CHECK_THROWS_AS(make_family(d, bad, cosp), std::invalid_argument);
  CHECK_THROWS_AS(make_family(d, Eigen::MatrixXd::Identity(3, 3), cosp), std::invalid_argument);
}

TEST_CASE("P_t on the flagship: alpha = 1, f11 = 1") {
  const auto d = make_example("so3-l5-n7");
  const auto fam = default_family(d);
  const auto& s = d->sub;
  for (double t : {0.0, 0.2, 0.7}) {
    const MetricOperator P(fam, t);
    const double h = fam.profile.h(t), dh = fam.profile.dh(t);
    for (int xi = 5; xi < 7; ++xi) {
      const auto E = basis_E(Field::R, 7, 4, xi);
      CHECK((P.P(E) - h * h * E).max_abs() <= 1e-15);
      // S = -(h'/h) on the last row
      CHECK((P.shape(E) + (dh / h) * E).max_abs() <= 1e-14);
      for (int a = 0; a < 4; ++a) {
        const auto Ea = basis_E(Field::R, 7, a, xi);
        CHECK(P.P(Ea) == Ea);
        CHECK(P.shape(Ea).is_zero());
      }
    }
    // identity off q
    for (int i = 0; i < s.q_offset; ++i) CHECK(P.P(s.p[static_cast<std::size_t>(i)]) == s.p[static_cast<std::size_t>(i)]);
  }
  // t = 0: P0 = F I
  const MetricOperator P0(fam, 0);
  for (const auto& X : s.p) CHECK(P0.P(X) == X);
  CHECK_THROWS_AS(MetricOperator(fam, 1.0), std::domain_error);
}

TEST_CASE("P_t with two copies: block form, parallel fields, symmetry of the shape operator") {
  const auto d = make_example("so3-l5-a2-n13");
  const auto fam = default_family(d);
  const auto& s = d->sub;
  const int m = s.m, n = s.n, l = s.l;
  const Eigen::VectorXd a = fam.F.col(1);
  for (double t : {0.0, 0.3, 0.8}) {
    const MetricOperator P(fam, t);
    const double h = fam.profile.h(t);
    for (int xi = m; xi < n; ++xi) {
      for (int i = 0; i < 2; ++i) {
        for (int row = 0; row + 1 < l; ++row) {
          AlgebraElement want(Field::R, n);
          for (int j = 0; j < 2; ++j) want = want + fam.F(i, j) * basis_E(Field::R, n, j * l + row, xi);
          CHECK((P.P(basis_E(Field::R, n, i * l + row, xi)) - want).max_abs() <= 1e-15);
        }
        AlgebraElement want(Field::R, n);
        for (int j = 0; j < 2; ++j)
          want = want + ((h * h - 1) * a(i) * a(j) + fam.F(i, j)) * basis_E(Field::R, n, j * l + l - 1, xi);
        CHECK((P.P(basis_E(Field::R, n, i * l + l - 1, xi)) - want).max_abs() <= 1e-15);
        // P'(E_{l,i} - a_i E_{l,alpha}) = 0
        const auto Xi = basis_E(Field::R, n, i * l + l - 1, xi) - a(i) * basis_E(Field::R, n, 2 * l - 1, xi);
        CHECK(P.dP(Xi).max_abs() <= 1e-15);
      }
    }
    // P S is Q-symmetric; P^-1 inverts P
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const auto X = random_in(s.p, rng), Y = random_in(s.p, rng);
      CHECK(innerQ(P.P(P.shape(X)), Y) == doctest::Approx(innerQ(X, P.P(P.shape(Y)))));
      CHECK((P.Pinv(P.P(X)) - X).max_abs() <= 1e-12);
      CHECK(innerQ(P.P(X), Y) == doctest::Approx(innerQ(X, P.P(Y))));
    }
  }
}

TEST_CASE("constant h: P' = 0 and formula (c) vanishes") {
  const auto d = make_example("so3-l5-n7");
  Profile one;
  one.name = "one";
  one.h = [](double) { return 1.0; };
  one.dh = one.d2h = [](double) { return 0.0; };
  const auto fam = make_family(d, d->default_F, one);
  const MetricOperator P(fam, 0.4);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto X = random_in(d->sub.p, rng), Y = random_in(d->sub.p, rng);
    CHECK(P.dP(X).is_zero());
    CHECK(P.shape(X).is_zero());
    const auto terms = curvature_components(P, d->sub, X, Y);
    CHECK(terms.c == 0);
    CHECK(terms.b == 0);
    const auto A = a_pm(P, X, Y);
    CHECK(A.plus.max_abs() == 0);
    CHECK((A.minus - bracket(X, Y)).max_abs() == 0);
  }
}

TEST_CASE("A+ is symmetric and A- antisymmetric") {
  const auto d = make_example("so3-l5-a2-n13");
  const auto fam = default_family(d);
  const MetricOperator P(fam, 0.35);
  std::mt19937 rng(11);
  const auto X = random_in(d->sub.p, rng), Y = random_in(d->sub.p, rng);
  const auto xy = a_pm(P, X, Y), yx = a_pm(P, Y, X);
  CHECK((xy.plus - yx.plus).max_abs() <= 1e-13);
  CHECK((xy.minus + yx.minus).max_abs() <= 1e-13);
}

TEST_CASE("flagship witness") {
  const auto d = make_example("so3-l5-n7");
  const auto fam = default_family(d);
  const auto w = build_witness(fam);
  CHECK(w.commutes_exactly);
  CHECK(bracket(w.X, w.Y).is_zero(0));
  CHECK(w.null_dim == 2);
  REQUIRE(w.b.size() == 4);
  // smallest-index null solution: the x^2 - y^2 direction
  CHECK(w.b(0) == 1);
  CHECK(w.b(1) == 0);
  CHECK(w.b(2) == 0);
  CHECK(w.b(3) == 0);
  CHECK(w.dA * w.dA == doctest::Approx(1));
  CHECK(w.x0_kminus_residual <= 1e-12);
  for (const auto& K : d->sub.k_minus) CHECK(std::abs(innerQ(w.X0, K)) <= 1e-12);
  // at t = 0 the identities (1), (3), (4) hold trivially
  const MetricOperator P0(fam, 0);
  CHECK(a_pm(P0, w.X, w.Y).plus.max_abs() <= 1e-15);
  CHECK(innerQ(P0.dP(w.X), w.Y) == 0);
}

TEST_CASE("flagship identities at 50 samples") {
  const auto fam = default_family(make_example("so3-l5-n7"));
  const auto w = build_witness(fam);
  const auto rep = verify_witness_identities(fam, w, interior_samples(1, 50));
  REQUIRE(rep.samples.size() == 50);
  CHECK(rep.identities_ok());
  CHECK(rep.decomposition_ok());
  CHECK(rep.commutes_exactly);
  const double tneg = rep.first_negative_t();
  CHECK(tneg > 0);
  CHECK(tneg <= 0.25);
  for (const auto& s : rep.samples) {
    const double h = fam.profile.h(s.t), dh = fam.profile.dh(s.t);
    CHECK(s.product == doctest::Approx(-h * h * dh * dh).epsilon(1e-12));
  }
}

TEST_CASE("two copies, complex and quaternionic examples") {
  for (const std::string name : {"so3-l5-a2-n13", "so3-l3-n5-c", "sp1-l2-n4-h"}) {
    CAPTURE(name);
    for (const auto& prof : profile_names()) {
      CAPTURE(prof);
      const auto fam = default_family(make_example(name), prof);
      const auto w = build_witness(fam);
      CHECK(w.null_dim >= 1);
      CHECK(w.x0_kminus_residual <= 1e-12);
      CHECK(bracket(w.X, w.Y).max_abs() <= 1e-14);
      const auto rep = verify_witness_identities(fam, w, interior_samples(1, 20));
      CHECK(rep.identities_ok());
      CHECK(rep.decomposition_ok());
      CHECK(rep.first_negative_t() > 0);
    }
  }
  const auto c = build_witness(default_family(make_example("so3-l3-n5-c")));
  CHECK(c.product_scale == 4);
  double sum = c.b.squaredNorm();
  for (const auto& q : c.c) sum += q.norm2();
  CHECK(sum == doctest::Approx(2));
  const auto q = build_witness(default_family(make_example("sp1-l2-n4-h")));
  CHECK(q.product_scale == 16);
  CHECK(q.c_last == Quat(1, 1, 1, 1));
  sum = q.b.squaredNorm();
  for (const auto& x : q.c) {
    CHECK(x.w == 0);
    sum += x.norm2();
  }
  CHECK(sum == doctest::Approx(4));
}

TEST_CASE("bi-invariant oracle") {
  const auto d = make_example("so3-l5-n7");
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, d->sub.g.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto X = project(d->sub.p, d->sub.g[pick(rng)]), Y = project(d->sub.p, d->sub.g[pick(rng)]);
    const auto XY = bracket(X, Y);
    const auto XYp = project(d->sub.p, XY);
    const double oracle = normQ2(XY - XYp) + 0.25 * normQ2(XYp);
    CHECK(std::abs(curvature_a_biinvariant(d->sub.p, X, Y) - oracle) <= 1e-12);
  }
}

TEST_CASE("Weyl representatives") {
  for (const auto& name : example_names()) {
    CAPTURE(name);
    const auto d = make_example(name);
    const auto w = weyl_representatives(*d);
    CHECK(w.w_plus_sq_in_H);
    CHECK(w.w_minus_sq_in_H);
    CHECK(w.w_plus_notin_H);
    CHECK(w.w_minus_notin_H);
    CHECK(w.commute);
    CHECK(w.product_notin_H);
  }
  const auto d = make_example("so3-l5-n7");
  const auto w = weyl_representatives(*d);
  // diag(A2, det A2, I2) with A2 = diag(1, -1, -1, 1)
  const double want[7] = {1, -1, -1, 1, 1, 1, 1};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(w.w_minus(i, j) == Quat(i == j ? want[i] : 0));
  const double plus[7] = {1, 1, 1, 1, -1, -1, 1};
  for (int i = 0; i < 7; ++i) CHECK(w.w_plus(i, i) == Quat(plus[i]));
  // H contains rho(SO(2)) and SO(2) on the last two coordinates
  const double th = 0.7;
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  R(0, 0) = R(1, 1) = std::cos(th);
  R(0, 1) = -std::sin(th);
  R(1, 0) = std::sin(th);
  const auto muR = harmonic_so3_group(2, R);
  AlgebraElement g = AlgebraElement::identity(Field::R, 7);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) g(i, j) = muR(i, j);
  g(5, 5) = g(6, 6) = Quat(std::cos(2.0));
  g(5, 6) = Quat(-std::sin(2.0));
  g(6, 5) = Quat(std::sin(2.0));
  CHECK(in_H(*d, g));
  // a rotation about the x-axis is not in H'
  R = Eigen::Matrix3d::Identity();
  R(1, 1) = R(2, 2) = std::cos(th);
  R(1, 2) = -std::sin(th);
  R(2, 1) = std::sin(th);
  const auto muX = harmonic_so3_group(2, R);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) g(i, j) = muX(i, j);
  CHECK_FALSE(in_H(*d, g));
}

TEST_CASE("obstruction scan") {
  EvenFunction sq{[](double t) { return t * t; }, [](double t) { return 2 * t; }};
  const auto grid = interior_samples(1, 20);
  for (const auto& hit : obstruction_scan(sq, log_grid(1e-3, 1e6, 40), grid)) {
    CHECK(hit.found);
    CHECK(hit.lhs < 0);
    CHECK(hit.t < 2 / hit.gamma + 1e-300);
  }
  const auto f = one_minus_h2(make_profile("cos"));
  const double pi = std::numbers::pi;
  CHECK(f.f(0.3) == doctest::Approx(std::pow(std::sin(pi * 0.3 / 2), 2)));
  const auto hits = obstruction_scan(f, {10.0}, grid);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].found);
  for (const auto& hit : obstruction_scan(f, log_grid(1e-3, 1e6, 37), grid)) CHECK(hit.found);

  EvenFunction zero{[](double) { return 0.0; }, [](double) { return 0.0; }};
  CHECK_THROWS_AS(obstruction_scan(zero, {1.0}, grid), std::invalid_argument);
  EvenFunction shifted{[](double t) { return 1 + t * t; }, [](double t) { return 2 * t; }};
  CHECK_THROWS_AS(obstruction_scan(shifted, {1.0}, grid), std::invalid_argument);
  EvenFunction odd{[](double t) { return t * t * t; }, [](double t) { return 3 * t * t; }};
  CHECK_THROWS_AS(obstruction_scan(odd, {1.0}, grid), std::invalid_argument);
}

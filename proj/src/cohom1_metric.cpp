#include "spherepair/cohom1.hpp"
#include "spherepair/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spherepair {

Profile make_profile(const std::string& name, double L) {
  if (!(L > 0)) throw std::invalid_argument("half-length L must be positive");
  Profile p;
  p.name = name;
  p.L = L;
  if (name == "cos") {
    const double w = std::numbers::pi / (2 * L);
    p.h = [w](double t) { return std::cos(w * t); };
    p.dh = [w](double t) { return -w * std::sin(w * t); };
    p.d2h = [w](double t) { return -w * w * std::cos(w * t); };
    p.one_minus_h = [w](double t) {
      const double s = std::sin(w * t / 2);
      return 2 * s * s;
    };
  } else if (name == "quartic") {
    p.h = [L](double t) {
      const double u = t / L;
      return (1 - u * u) * (1 - u * u);
    };
    p.dh = [L](double t) {
      const double u = t / L;
      return -4 * u * (1 - u * u) / L;
    };
    p.d2h = [L](double t) {
      const double u = t / L;
      return -4 * (1 - 3 * u * u) / (L * L);
    };
    p.one_minus_h = [L](double t) {
      const double u = t / L;
      return u * u * (2 - u * u);
    };
  } else {
    throw UnknownSelector("unknown profile '" + name + "'; valid: cos, quartic");
  }
  return p;
}

std::vector<std::string> profile_names() { return {"cos", "quartic"}; }

namespace {

struct ExampleSpec {
  const char* name;
  const char* summary;
  Field field;
  const char* pair;
  long long a;
  int alpha;
  int n;
};

const ExampleSpec kExamples[] = {
    {"so3-l5-n7", "SO(7), K' = SO(3), mu = 2w1 on harmonic quadrics (l = 5), m = 5", Field::R, "so:3", 2, 1, 7},
    {"so3-l5-a2-n13", "SO(13), K' = SO(3), rho = 2w1 + 2w1 (l = 5), m = 10", Field::R, "so:3", 2, 2, 13},
    {"so3-l3-n5-c", "U(5), K' = SO(3) on C^3 (l = 3), m = 3", Field::C, "so:3", 1, 1, 5},
    {"sp1-l2-n4-h", "Sp(4), K' = Sp(1) on S^3(C^2) = H^2 (l = 2), m = 2", Field::H, "sp:1", 3, 1, 4},
};

EmbeddedRep embedding_for(const ExampleSpec& e) {
  if (e.field == Field::H) return sp1_cubic_embedding();
  const auto r = harmonic_so3_embedding(static_cast<int>(e.a));
  return e.field == Field::C ? complexify(r) : r;
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& e : kExamples) out.emplace_back(e.name);
  return out;
}

std::shared_ptr<const GroupDiagram> make_example(const std::string& name) {
  for (const auto& e : kExamples) {
    if (name != e.name) continue;
    auto d = std::make_shared<GroupDiagram>();
    d->name = e.name;
    d->summary = e.summary;
    d->candidate.mu = make_record(parse_pair(e.pair), {e.a, 0, 0});
    d->candidate.alpha = e.alpha;
    d->candidate.field = e.field;
    d->candidate.n = e.n;
    const auto adm = check_diagram_admissible(d->candidate);
    if (!adm.accepted) throw InternalInconsistency("registered example " + d->name + " is not admissible: " + adm.reason);
    d->mu = embedding_for(e);
    d->sub = diagram_subspaces(d->candidate, d->mu);
    const int l = d->mu.l;
    if (e.field != Field::R || d->mu.type == RepType::Real || e.alpha == 1) {
      d->p = l;
      d->beta = e.field == Field::R ? e.alpha : 1;
    } else {
      const int split = d->mu.type == RepType::Complex ? 2 : 4;
      d->p = l / split;
      d->beta = split * e.alpha;
    }
    Eigen::MatrixXd F = Eigen::MatrixXd::Identity(d->beta, d->beta);
    if (d->beta > 1) {
      F += 0.1 * Eigen::MatrixXd::Ones(d->beta, d->beta);
      F /= F(d->beta - 1, d->beta - 1);
    }
    d->default_F = F;
    return d;
  }
  std::string valid;
  for (const auto& e : kExamples) valid += std::string(valid.empty() ? "" : ", ") + e.name;
  throw UnknownSelector("unknown example '" + name + "'; valid: " + valid);
}

namespace {

// blocks of F coming from one complex (2x2) or quaternionic (4x4) summand must be scalars
// in the commutant of the structure: a I + b J, or a I + x L1 + y L2 + z L3
void check_companions(const Eigen::MatrixXd& F, int split) {
  if (split == 1) return;
  std::vector<Eigen::MatrixXd> gens;
  if (split == 2) {
    Eigen::MatrixXd J(2, 2);
    J << 0, -1, 1, 0;
    gens = {J};
  } else {
    Eigen::MatrixXd L1(4, 4), L2(4, 4), L3(4, 4);
    L1 << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0;
    L2 << 0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0;
    L3 << 0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0;
    gens = {L1, L2, L3};
  }
  const int blocks = static_cast<int>(F.rows()) / split;
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < blocks; ++j) {
      const Eigen::MatrixXd B = F.block(i * split, j * split, split, split);
      Eigen::MatrixXd fit = B(0, 0) * Eigen::MatrixXd::Identity(split, split);
      for (std::size_t g = 0; g < gens.size(); ++g) fit += B(0, static_cast<Eigen::Index>(g) + 1) * gens[g];
      if ((fit - B).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("F violates the companion identities in block (" + std::to_string(i + 1) + ", " +
                                    std::to_string(j + 1) + ")");
    }
}

}  // namespace

MetricFamily make_family(std::shared_ptr<const GroupDiagram> d, const Eigen::MatrixXd& F, Profile h) {
  if (!d) throw std::invalid_argument("metric family needs a diagram");
  const int beta = d->beta;
  if (F.rows() != beta || F.cols() != beta)
    throw std::invalid_argument("F must be " + std::to_string(beta) + " x " + std::to_string(beta));
  if ((F - F.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("F is not symmetric");
  if (std::abs(F(beta - 1, beta - 1) - 1) > 1e-12) throw std::invalid_argument("F must satisfy f_{beta,beta} = 1");
  if (d->sub.field == Field::R && d->mu.type != RepType::Real && d->candidate.alpha > 1)
    check_companions(F, d->mu.type == RepType::Complex ? 2 : 4);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(F);
  if (es.eigenvalues().minCoeff() <= 0) {
    std::ostringstream os;
    os << "F is not positive definite (eigenvalue " << es.eigenvalues().minCoeff() << ")";
    throw std::invalid_argument(os.str());
  }
  MetricFamily fam;
  fam.diagram = std::move(d);
  fam.F = F;
  fam.profile = std::move(h);
  fam.A = es.eigenvectors();
  fam.D = es.eigenvalues();
  if ((fam.A * fam.D.asDiagonal() * fam.A.transpose() - F).cwiseAbs().maxCoeff() > 1e-12)
    throw InternalInconsistency("eigendecomposition of F is inaccurate");
  fam.i0 = -1;
  for (int i = 0; i < beta && fam.i0 < 0; ++i)
    if (std::abs(fam.A(beta - 1, i)) > 1e-12) fam.i0 = i;
  if (fam.i0 < 0) throw InternalInconsistency("last row of A vanishes");
  return fam;
}

MetricFamily default_family(std::shared_ptr<const GroupDiagram> d, const std::string& profile) {
  const Eigen::MatrixXd F = d->default_F;
  return make_family(std::move(d), F, make_profile(profile));
}

MetricOperator::MetricOperator(const MetricFamily& fam, double t) : d_(fam.diagram.get()), t_(t) {
  const auto& pr = fam.profile;
  const double h = pr.h(t), dh = pr.dh(t), d2h = pr.d2h(t);
  F_ = fam.F;
  Finv_ = F_.inverse();
  const int beta = d_->beta;
  const Eigen::VectorXd a = F_.col(beta - 1);
  const Eigen::MatrixXd aa = a * a.transpose();
  Mp_ = (h * h - 1) * aa + F_;
  dM_ = 2 * h * dh * aa;
  d2M_ = 2 * (dh * dh + h * d2h) * aa;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Mp_);
  if (es.eigenvalues().minCoeff() <= 0) {
    std::ostringstream os;
    os << "P_t is not positive definite at t = " << t << " (eigenvalue " << es.eigenvalues().minCoeff() << ")";
    throw std::domain_error(os.str());
  }
  Mpinv_ = Mp_.inverse();
}

AlgebraElement MetricOperator::apply(const AlgebraElement& X, Which w) const {
  const auto& s = d_->sub;
  if (X.field() != s.field || X.n() != s.n) throw std::invalid_argument("element does not live in g");
  const bool keep = w == Which::P || w == Which::Pinv;
  AlgebraElement out = keep ? X : AlgebraElement(s.field, s.n);
  const int p = d_->p, beta = d_->beta;
  for (int a = 0; a < p; ++a) {
    const bool last = a == p - 1;
    const Eigen::MatrixXd* M = nullptr;
    switch (w) {
      case Which::P: M = last ? &Mp_ : &F_; break;
      case Which::Pinv: M = last ? &Mpinv_ : &Finv_; break;
      case Which::dP: M = last ? &dM_ : nullptr; break;
      case Which::d2P: M = last ? &d2M_ : nullptr; break;
    }
    for (int j = s.m; j < s.n; ++j)
      for (int k = 0; k < beta; ++k) {
        const int row = s.r + k * p + a;
        Quat v;
        if (M)
          for (int i = 0; i < beta; ++i) v = v + (*M)(k, i) * X(s.r + i * p + a, j);
        out(row, j) = v;
        out(j, row) = -v.conj();
      }
  }
  return out;
}

AlgebraElement MetricOperator::P(const AlgebraElement& X) const { return apply(X, Which::P); }
AlgebraElement MetricOperator::dP(const AlgebraElement& X) const { return apply(X, Which::dP); }
AlgebraElement MetricOperator::d2P(const AlgebraElement& X) const { return apply(X, Which::d2P); }
AlgebraElement MetricOperator::Pinv(const AlgebraElement& X) const { return apply(X, Which::Pinv); }
AlgebraElement MetricOperator::shape(const AlgebraElement& X) const { return -0.5 * Pinv(dP(X)); }

MetricOperator metric_operator(const MetricFamily& fam, double t) { return MetricOperator(fam, t); }

APair a_pm(const MetricOperator& P, const AlgebraElement& X, const AlgebraElement& Y) {
  const auto u = bracket(X, P.P(Y)), v = bracket(P.P(X), Y);
  return {0.5 * (u - v), 0.5 * (u + v)};
}

namespace {

using Map = std::function<AlgebraElement(const AlgebraElement&)>;

struct Ops {
  Map P, dP, d2P, Pinv, proj_p;
};

CurvatureTerms formulas(const Ops& o, const AlgebraElement& X, const AlgebraElement& Y) {
  auto Aplus = [&](const AlgebraElement& U, const AlgebraElement& V) {
    return 0.5 * (bracket(U, o.P(V)) - bracket(o.P(U), V));
  };
  const auto XY = bracket(X, Y);
  const auto XYp = o.proj_p(XY);
  const auto Aminus = 0.5 * (bracket(X, o.P(Y)) + bracket(o.P(X), Y));
  const auto Axy = Aplus(X, Y), Axx = Aplus(X, X), Ayy = Aplus(Y, Y);
  const auto Axy_p = o.proj_p(Axy), Axx_p = o.proj_p(Axx), Ayy_p = o.proj_p(Ayy);
  const auto dPX = o.dP(X), dPY = o.dP(Y);

  CurvatureTerms r;
  r.a_plus_h_residual = (Axy - Axy_p).max_abs() + (Axx - Axx_p).max_abs() + (Ayy - Ayy_p).max_abs();
  const double qxy = innerQ(dPX, Y);
  r.a = innerQ(Aminus, XY) - 0.75 * innerQ(o.P(XYp), XYp) + innerQ(Axy_p, o.Pinv(Axy_p)) -
        innerQ(Axx_p, o.Pinv(Ayy_p)) + 0.25 * qxy * qxy - 0.25 * innerQ(dPX, X) * innerQ(dPY, Y);
  r.b = -0.5 * innerQ(dPX, o.Pinv(Ayy_p)) + 0.5 * innerQ(dPY, o.Pinv(Axy_p)) + 0.75 * innerQ(XY, dPY);
  r.c = innerQ(-0.5 * o.d2P(X) + 0.25 * o.dP(o.Pinv(dPX)), X);
  const auto PX = o.P(X);
  const double gxy = innerQ(PX, Y);
  r.norm2 = innerQ(PX, X) * innerQ(o.P(Y), Y) - gxy * gxy;
  return r;
}

}  // namespace

CurvatureTerms curvature_components(const MetricOperator& P, const DiagramSubspaces& s, const AlgebraElement& X,
                                    const AlgebraElement& Y) {
  Ops o;
  o.P = [&](const AlgebraElement& U) { return P.P(U); };
  o.dP = [&](const AlgebraElement& U) { return P.dP(U); };
  o.d2P = [&](const AlgebraElement& U) { return P.d2P(U); };
  o.Pinv = [&](const AlgebraElement& U) { return P.Pinv(U); };
  // g = h + p orthogonally and h is the small one
  o.proj_p = [&](const AlgebraElement& U) { return U - project(s.h, U); };
  return formulas(o, X, Y);
}

double curvature_a_biinvariant(const std::vector<AlgebraElement>& p_basis, const AlgebraElement& X,
                               const AlgebraElement& Y) {
  Ops o;
  const Map id = [](const AlgebraElement& U) { return U; };
  const Map zero = [](const AlgebraElement& U) { return AlgebraElement(U.field(), U.n()); };
  o.P = o.Pinv = id;
  o.dP = o.d2P = zero;
  o.proj_p = [&](const AlgebraElement& U) { return project(p_basis, U); };
  return formulas(o, X, Y).a;
}

}  // namespace spherepair

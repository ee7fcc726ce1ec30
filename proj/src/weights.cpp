#include "spherepair/weights.hpp"

#include "spherepair/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spherepair {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::U: return "U";
    case Family::T: return "T";
  }
  return "?";
}

Weight Weight::ints(std::initializer_list<long long> v, Basis b) {
  return Weight(to_rat(std::vector<long long>(v)), b);
}

Weight Weight::halves(std::initializer_list<long long> v, Basis b) {
  RatVec c(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long long x : v) c[i++] = Rat(x, 2);
  return Weight(c, b);
}

Weight Weight::zero(int n, Basis b) { return Weight(rat_zero(n), b); }

bool Weight::is_zero() const {
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    if (coords[i].numerator() != 0) return false;
  return true;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << to_string(coords[i]);
  }
  os << ')';
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) { return Weight(a.coords + b.coords, a.basis); }
Weight operator-(const Weight& a, const Weight& b) { return Weight(a.coords - b.coords, a.basis); }
Weight operator-(const Weight& a) { return Weight(-a.coords, a.basis); }
Weight operator*(const Rat& s, const Weight& a) { return Weight(a.coords * s, a.basis); }

bool operator==(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (Eigen::Index i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] != b.coords[i]) return false;
  return true;
}

namespace {

Weight unit(int dim, int i, Basis b = Basis::E) {
  Weight w = Weight::zero(dim, b);
  w[i] = Rat(1);
  return w;
}

RatMat reflection_matrix(const RatMat& gram, const Weight& alpha) {
  const RatVec ga = gram * alpha.coords;
  Rat aa(0);
  for (Eigen::Index i = 0; i < ga.size(); ++i) aa += alpha.coords[i] * ga[i];
  RatMat m = rat_identity(static_cast<int>(gram.rows()));
  const Rat f = Rat(2) / aa;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= f * alpha.coords[i] * ga[j];
  return m;
}

void finish(RootSystemData& rs) {
  rs.delta = Weight::zero(rs.dim, rs.basis);
  for (const auto& a : rs.positive_roots) rs.delta = rs.delta + a;
  rs.delta = Rat(1, 2) * rs.delta;
  if (rs.rank > 0) {
    RatMat sg(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) sg(i, j) = inner(rs, rs.simple_roots[i], rs.simple_roots[j]);
    rs.simple_gram_inv = rat_inverse(sg);
  } else {
    rs.simple_gram_inv = RatMat(0, 0);
  }
}

RootSystemData single(Family f, int rank) {
  RootSystemData rs;
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::U:
    case Family::T:
      if (rank < 1) throw std::invalid_argument("build_root_system: rank must be >= 1");
      break;
    case Family::D:
      if (rank < 2) throw std::invalid_argument("build_root_system: D needs rank >= 2");
      break;
    case Family::G2:
      if (rank != 2) throw std::invalid_argument("build_root_system: G2 has rank 2");
      break;
  }

  int dim = rank;
  int ss = rank;
  if (f == Family::A) dim = rank + 1;
  if (f == Family::U) ss = rank - 1;
  if (f == Family::T) ss = 0;
  rs.dim = dim;
  rs.rank = ss;
  rs.basis = f == Family::G2 ? Basis::SimpleRoot : Basis::E;
  rs.components.push_back({f, ss, 0, dim});
  rs.label = family_name(f) + std::to_string(rank);
  if (f == Family::U) rs.label = "u(" + std::to_string(rank) + ")";

  rs.gram = rat_identity(dim);
  if (f == Family::A) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) rs.gram(i, j) -= Rat(1, dim);
  }
  if (f == Family::G2) {
    rs.gram(0, 0) = Rat(1);
    rs.gram(0, 1) = rs.gram(1, 0) = Rat(-3, 2);
    rs.gram(1, 1) = Rat(3);
  }

  auto e = [&](int i) { return unit(dim, i, rs.basis); };
  if (f == Family::G2) {
    rs.positive_roots = {Weight::ints({1, 0}, Basis::SimpleRoot), Weight::ints({3, 1}, Basis::SimpleRoot),
                         Weight::ints({2, 1}, Basis::SimpleRoot), Weight::ints({3, 2}, Basis::SimpleRoot),
                         Weight::ints({1, 1}, Basis::SimpleRoot), Weight::ints({0, 1}, Basis::SimpleRoot)};
    rs.simple_roots = {e(0), e(1)};
    RatMat sigma(2, 2), tau(2, 2);
    // columns are images of alpha_1, alpha_2
    sigma << Rat(-1), Rat(3), Rat(-1), Rat(2);
    tau << Rat(-1), Rat(0), Rat(-1), Rat(1);
    rs.weyl_generators = {sigma, tau};
    finish(rs);
    return rs;
  }
  if (f == Family::T) {
    finish(rs);
    return rs;
  }

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      rs.positive_roots.push_back(e(i) - e(j));
      if (f == Family::B || f == Family::C || f == Family::D) rs.positive_roots.push_back(e(i) + e(j));
    }
  if (f == Family::B)
    for (int i = 0; i < dim; ++i) rs.positive_roots.push_back(e(i));
  if (f == Family::C)
    for (int i = 0; i < dim; ++i) rs.positive_roots.push_back(Rat(2) * e(i));

  for (int i = 0; i + 1 < dim; ++i) rs.simple_roots.push_back(e(i) - e(i + 1));
  if (f == Family::B) rs.simple_roots.push_back(e(dim - 1));
  if (f == Family::C) rs.simple_roots.push_back(Rat(2) * e(dim - 1));
  if (f == Family::D) rs.simple_roots.push_back(e(dim - 2) + e(dim - 1));

  for (const auto& a : rs.simple_roots) rs.weyl_generators.push_back(reflection_matrix(rs.gram, a));
  finish(rs);
  return rs;
}

Weight embed(const Weight& w, int dim, int offset) {
  Weight out = Weight::zero(dim, w.basis);
  for (int i = 0; i < w.size(); ++i) out[offset + i] = w[i];
  return out;
}

RatMat embed(const RatMat& m, int dim, int offset) {
  RatMat out = rat_identity(dim);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(offset + i, offset + j) = m(i, j);
  return out;
}

}  // namespace

RootSystemData build_root_system(Family f, int rank) { return single(f, rank); }

RootSystemData direct_sum(const RootSystemData& a, const RootSystemData& b) {
  RootSystemData rs;
  rs.dim = a.dim + b.dim;
  rs.rank = a.rank + b.rank;
  rs.basis = a.basis == b.basis ? a.basis : Basis::E;
  rs.label = a.label + "+" + b.label;
  rs.components = a.components;
  for (auto c : b.components) {
    c.offset += a.dim;
    rs.components.push_back(c);
  }
  rs.gram = RatMat(rs.dim, rs.dim);
  for (int i = 0; i < rs.dim; ++i)
    for (int j = 0; j < rs.dim; ++j) rs.gram(i, j) = Rat(0);
  rs.gram.topLeftCorner(a.dim, a.dim) = a.gram;
  rs.gram.bottomRightCorner(b.dim, b.dim) = b.gram;
  for (const auto& r : a.positive_roots) rs.positive_roots.push_back(embed(r, rs.dim, 0));
  for (const auto& r : b.positive_roots) rs.positive_roots.push_back(embed(r, rs.dim, a.dim));
  for (const auto& r : a.simple_roots) rs.simple_roots.push_back(embed(r, rs.dim, 0));
  for (const auto& r : b.simple_roots) rs.simple_roots.push_back(embed(r, rs.dim, a.dim));
  for (const auto& g : a.weyl_generators) rs.weyl_generators.push_back(embed(g, rs.dim, 0));
  for (const auto& g : b.weyl_generators) rs.weyl_generators.push_back(embed(g, rs.dim, a.dim));
  finish(rs);
  return rs;
}

RootSystemData custom_root_system(std::string label, RatMat gram, std::vector<Weight> positive,
                                  std::vector<Weight> simple, Basis basis) {
  RootSystemData rs;
  rs.label = std::move(label);
  rs.dim = static_cast<int>(gram.rows());
  rs.rank = static_cast<int>(simple.size());
  rs.basis = basis;
  // tagged A only for bookkeeping; canonical() leaves non-E bases alone
  rs.components.push_back({Family::A, rs.rank, 0, rs.dim});
  rs.gram = std::move(gram);
  rs.positive_roots = std::move(positive);
  rs.simple_roots = std::move(simple);
  for (const auto& a : rs.simple_roots) rs.weyl_generators.push_back(reflection_matrix(rs.gram, a));
  finish(rs);
  return rs;
}

Rat inner(const RootSystemData& rs, const Weight& x, const Weight& y) {
  Rat s(0);
  for (int i = 0; i < rs.dim; ++i) {
    if (x[i].numerator() == 0) continue;
    for (int j = 0; j < rs.dim; ++j) {
      if (y[j].numerator() == 0 || rs.gram(i, j).numerator() == 0) continue;
      s += x[i] * rs.gram(i, j) * y[j];
    }
  }
  return s;
}

Rat coroot_pairing(const RootSystemData& rs, const Weight& x, const Weight& alpha) {
  return Rat(2) * inner(rs, x, alpha) / inner(rs, alpha, alpha);
}

Weight reflect(const RootSystemData& rs, const Weight& x, const Weight& alpha) {
  return x - coroot_pairing(rs, x, alpha) * alpha;
}

Weight apply(const RatMat& w, const Weight& x) { return Weight(w * x.coords, x.basis); }

std::vector<Rat> dynkin_labels(const RootSystemData& rs, const Weight& x) {
  std::vector<Rat> out;
  for (const auto& a : rs.simple_roots) out.push_back(coroot_pairing(rs, x, a));
  return out;
}

bool is_dominant(const RootSystemData& rs, const Weight& x) {
  for (const auto& a : rs.simple_roots)
    if (inner(rs, x, a).numerator() < 0) return false;
  return true;
}

Weight dominant_conjugate(const RootSystemData& rs, const Weight& x) {
  Weight w = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : rs.simple_roots) {
      if (inner(rs, w, a).numerator() < 0) {
        w = reflect(rs, w, a);
        moved = true;
      }
    }
  }
  return w;
}

bool is_positive_root(const RootSystemData& rs, const Weight& x) {
  for (const auto& a : rs.positive_roots)
    if (a == x) return true;
  return false;
}

Weight canonical(const RootSystemData& rs, const Weight& x) {
  Weight w = x;
  if (rs.basis != Basis::E) return w;
  for (const auto& c : rs.components) {
    if (c.family != Family::A) continue;
    const Rat last = w[c.offset + c.dim - 1];
    if (last.numerator() == 0) continue;
    for (int i = 0; i < c.dim; ++i) w[c.offset + i] -= last;
  }
  return w;
}

RatVec simple_root_coords(const RootSystemData& rs, const Weight& x) {
  RatVec b(rs.rank);
  for (int j = 0; j < rs.rank; ++j) b[j] = inner(rs, x, rs.simple_roots[j]);
  return rs.simple_gram_inv * b;
}

Weight fundamental_weight(const RootSystemData& rs, int i) {
  if (rs.components.size() != 1) throw std::invalid_argument("fundamental_weight: not a simple system");
  const Component& c = rs.components.front();
  const int k = c.dim;
  if (i < 1 || (c.family != Family::U && i > c.rank) || (c.family == Family::U && i > k))
    throw std::invalid_argument("fundamental_weight: index out of range");
  if (c.family == Family::G2) return i == 1 ? Weight::ints({2, 1}, Basis::SimpleRoot) : Weight::ints({3, 2}, Basis::SimpleRoot);
  Weight w = Weight::zero(k);
  auto prefix = [&](int n, const Rat& v) {
    for (int j = 0; j < n; ++j) w[j] = v;
  };
  switch (c.family) {
    case Family::A:
    case Family::C:
    case Family::U:
      prefix(i, Rat(1));
      break;
    case Family::B:
      // SO(3) keeps w1 = e1; the spin weight only enters from rank 2 on
      if (i < k || k == 1) prefix(i, Rat(1));
      else prefix(k, Rat(1, 2));
      break;
    case Family::D:
      if (i == 1 || i <= k - 2) {
        prefix(i, Rat(1));
      } else if (i == k - 1) {
        prefix(k, Rat(1, 2));
        w[k - 1] = Rat(-1, 2);
      } else {
        prefix(k, Rat(1, 2));
      }
      break;
    default:
      throw std::invalid_argument("fundamental_weight: no fundamental weights");
  }
  return w;
}

Weight from_fundamental(const RootSystemData& rs, const std::vector<long long>& coeffs) {
  Weight w = Weight::zero(rs.dim, rs.basis);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) w = w + Rat(coeffs[i]) * fundamental_weight(rs, static_cast<int>(i) + 1);
  return w;
}

long long weyl_dim(const RootSystemData& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("weyl_dim: weight not dominant " + lambda.str());
  const Weight ld = lambda + rs.delta;
  Rat d(1);
  for (const auto& a : rs.positive_roots) d *= inner(rs, ld, a) / inner(rs, rs.delta, a);
  if (d.denominator() != 1) throw InternalInconsistency("weyl_dim: non-integral result");
  return d.numerator();
}

long long WeightMultiplicityTable::total() const {
  long long s = 0;
  for (const auto& [w, m] : mult) s += m;
  return s;
}

long long WeightMultiplicityTable::at(const Weight& w) const {
  auto it = mult.find(w);
  return it == mult.end() ? 0 : it->second;
}

std::size_t oracle_bound() {
  if (const char* s = std::getenv("SPHEREPAIR_ORACLE_BOUND")) {
    try {
      return static_cast<std::size_t>(std::stoull(s));
    } catch (...) {
    }
  }
  return 50000;
}

namespace {

bool in_positive_cone(const RatVec& c) {
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c[i].numerator() < 0 || c[i].denominator() != 1) return false;
  return true;
}

Rat height(const RatVec& c) {
  Rat h(0);
  for (Eigen::Index i = 0; i < c.size(); ++i) h += c[i];
  return h;
}

}  // namespace

WeightMultiplicityTable freudenthal_multiplicities(const RootSystemData& rs, const Weight& lambda,
                                                   std::size_t bound) {
  const long long dim = weyl_dim(rs, lambda);
  if (static_cast<std::size_t>(dim) > bound)
    throw OracleRefused("oracle refused: dimension " + std::to_string(dim) + " exceeds bound " +
                        std::to_string(bound));

  // dominant weights below lambda, connected through positive-root steps
  std::map<Weight, Rat, WeightLess> dominant;  // weight -> height below lambda
  std::deque<Weight> queue{lambda};
  dominant.emplace(lambda, Rat(0));
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.positive_roots) {
      Weight nu = mu - a;
      if (dominant.count(nu) || !is_dominant(rs, nu)) continue;
      const RatVec c = simple_root_coords(rs, lambda - nu);
      if (!in_positive_cone(c)) continue;
      dominant.emplace(nu, height(c));
      queue.push_back(nu);
    }
  }

  std::vector<std::pair<Rat, Weight>> order;
  for (const auto& [w, h] : dominant) order.emplace_back(h, w);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return lex_less(x.second.coords, y.second.coords);
  });

  std::map<Weight, long long, WeightLess> dm;
  const Weight ld = lambda + rs.delta;
  const Rat top = inner(rs, ld, ld);
  for (const auto& [h, mu] : order) {
    if (h.numerator() == 0) {
      dm[mu] = 1;
      continue;
    }
    Rat acc(0);
    for (const auto& a : rs.positive_roots) {
      for (long long k = 1;; ++k) {
        const Weight nu = mu + Rat(k) * a;
        auto it = dm.find(dominant_conjugate(rs, nu));
        if (it == dm.end()) break;
        acc += Rat(it->second) * inner(rs, nu, a);
      }
    }
    const Weight md = mu + rs.delta;
    const Rat m = Rat(2) * acc / (top - inner(rs, md, md));
    if (m.denominator() != 1 || m.numerator() < 0) throw InternalInconsistency("freudenthal: non-integral multiplicity");
    dm[mu] = m.numerator();
  }

  WeightMultiplicityTable out;
  for (const auto& [mu, m] : dm) {
    if (m == 0) continue;
    std::set<Weight, WeightLess> orbit{mu};
    std::deque<Weight> q{mu};
    while (!q.empty()) {
      const Weight w = q.front();
      q.pop_front();
      for (const auto& a : rs.simple_roots) {
        Weight r = reflect(rs, w, a);
        if (orbit.insert(r).second) q.push_back(r);
      }
    }
    for (const auto& w : orbit) out.mult[canonical(rs, w)] += m;
  }
  if (out.total() != dim) throw InternalInconsistency("freudenthal: total does not match weyl_dim");
  return out;
}

std::vector<RatMat> weyl_group_elements(const RootSystemData& rs, std::size_t bound) {
  auto key = [](const RatMat& m) {
    std::vector<Rat> k(m.data(), m.data() + m.size());
    return k;
  };
  std::vector<RatMat> out{rat_identity(rs.dim)};
  std::set<std::vector<Rat>> seen{key(out.front())};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : rs.weyl_generators) {
      RatMat p = g * out[i];
      if (seen.insert(key(p)).second) {
        if (out.size() >= bound) throw std::length_error("weyl_group_elements: bound exceeded");
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

int weyl_sign(const RootSystemData& rs, const RatMat& w) {
  int neg = 0;
  for (const auto& a : rs.positive_roots)
    if (!is_positive_root(rs, apply(w, a))) ++neg;
  return neg % 2 ? -1 : 1;
}

int matrix_order(const RatMat& w, int max_order) {
  const RatMat id = rat_identity(static_cast<int>(w.rows()));
  RatMat p = w;
  for (int k = 1; k <= max_order; ++k) {
    if (p == id) return k;
    p = p * w;
  }
  return 0;
}

}  // namespace spherepair

#pragma once

#include "spherepair/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace spherepair {

// U is u(n) in raw integer coordinates (no quotient), T an abelian factor with no roots.
enum class Family { A, B, C, D, G2, U, T };
enum class Basis { E, SimpleRoot };

std::string family_name(Family f);

struct Weight {
  RatVec coords;
  Basis basis = Basis::E;

  Weight() = default;
  explicit Weight(RatVec c, Basis b = Basis::E) : coords(std::move(c)), basis(b) {}
  static Weight ints(std::initializer_list<long long> v, Basis b = Basis::E);
  // every entry divided by two: halves({1,1,1}) = (1/2,1/2,1/2)
  static Weight halves(std::initializer_list<long long> v, Basis b = Basis::E);
  static Weight zero(int n, Basis b = Basis::E);

  int size() const { return static_cast<int>(coords.size()); }
  const Rat& operator[](int i) const { return coords[i]; }
  Rat& operator[](int i) { return coords[i]; }

  bool is_zero() const;
  std::string str() const;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rat& s, const Weight& a);
bool operator==(const Weight& a, const Weight& b);
inline bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return lex_less(a.coords, b.coords); }
};

struct Component {
  Family family;
  int rank;    // semisimple rank (0 for T)
  int offset;  // first coordinate
  int dim;     // number of coordinates
};

struct RootSystemData {
  std::string label;
  std::vector<Component> components;
  int rank = 0;
  int dim = 0;
  Basis basis = Basis::E;
  RatMat gram;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  Weight delta;
  std::vector<RatMat> weyl_generators;
  RatMat simple_gram_inv;

  Family family() const { return components.front().family; }
};

// A: su(rank+1) on rank+1 coordinates, representative a_n = 0.
// U: u(rank) on rank coordinates. T: torus of dimension rank.
// G2 lives in the simple-root basis (alpha_1 short).
RootSystemData build_root_system(Family f, int rank);
RootSystemData direct_sum(const RootSystemData& a, const RootSystemData& b);
// a subsystem given by explicit positive and simple roots inside an ambient Gram matrix
RootSystemData custom_root_system(std::string label, RatMat gram, std::vector<Weight> positive,
                                  std::vector<Weight> simple, Basis basis);

Rat inner(const RootSystemData& rs, const Weight& x, const Weight& y);
Rat coroot_pairing(const RootSystemData& rs, const Weight& x, const Weight& alpha);
Weight reflect(const RootSystemData& rs, const Weight& x, const Weight& alpha);
Weight apply(const RatMat& w, const Weight& x);

std::vector<Rat> dynkin_labels(const RootSystemData& rs, const Weight& x);
bool is_dominant(const RootSystemData& rs, const Weight& x);
Weight dominant_conjugate(const RootSystemData& rs, const Weight& x);
bool is_positive_root(const RootSystemData& rs, const Weight& x);
// fixes the a_n = 0 representative on every A block
Weight canonical(const RootSystemData& rs, const Weight& x);
// coefficients of the root-span part of x in the simple roots
RatVec simple_root_coords(const RootSystemData& rs, const Weight& x);

// 1-based, conventions of the usual list (SO: w1 = e1; spin weights halved; G2 w1 = 2a1+a2)
Weight fundamental_weight(const RootSystemData& rs, int i);
Weight from_fundamental(const RootSystemData& rs, const std::vector<long long>& coeffs);

struct HighestWeightRep {
  std::shared_ptr<const RootSystemData> root_system;
  Weight lambda;
};

long long weyl_dim(const RootSystemData& rs, const Weight& lambda);
inline long long weyl_dim(const HighestWeightRep& r) { return weyl_dim(*r.root_system, r.lambda); }

struct WeightMultiplicityTable {
  std::map<Weight, long long, WeightLess> mult;
  long long total() const;
  long long at(const Weight& w) const;
};

// Default 50000, overridden by SPHEREPAIR_ORACLE_BOUND.
std::size_t oracle_bound();

WeightMultiplicityTable freudenthal_multiplicities(const RootSystemData& rs, const Weight& lambda,
                                                   std::size_t bound = oracle_bound());
inline WeightMultiplicityTable freudenthal_multiplicities(const HighestWeightRep& r) {
  return freudenthal_multiplicities(*r.root_system, r.lambda);
}

std::vector<RatMat> weyl_group_elements(const RootSystemData& rs, std::size_t bound = 1000000);
// (-1)^(number of positive roots sent to negative roots)
int weyl_sign(const RootSystemData& rs, const RatMat& w);
// order of a matrix in GL(n, Q), 0 if above max_order
int matrix_order(const RatMat& w, int max_order = 64);

}  // namespace spherepair

#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace spherepair {

using Rat = boost::rational<long long>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vec<Rat>;
using RatMat = Mat<Rat>;

std::string to_string(const Rat& r);

// lexicographic, used for map keys and for the peeling order
bool lex_less(const RatVec& a, const RatVec& b);

RatMat rat_identity(int n);
RatVec rat_zero(int n);

// Gauss-Jordan over Q; throws std::domain_error on a singular matrix
RatMat rat_inverse(const RatMat& m);
Rat rat_determinant(RatMat m);

RatVec to_rat(const std::vector<long long>& v);

}  // namespace spherepair

namespace Eigen {
template <>
struct NumTraits<spherepair::Rat> : GenericNumTraits<spherepair::Rat> {
  typedef spherepair::Rat Real;
  typedef spherepair::Rat NonInteger;
  typedef spherepair::Rat Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

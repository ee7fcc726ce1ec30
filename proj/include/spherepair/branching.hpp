#pragma once

#include "spherepair/weights.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace spherepair {

// Linear map on weight coordinates: target = matrix * source.
struct RestrictionMap {
  RatMat matrix;
  std::string source;
  std::string target;
  Basis target_basis = Basis::E;

  Weight operator()(const Weight& w) const { return Weight(matrix * w.coords, target_basis); }
};

// identity on the first `keep` coordinates of a `dim`-coordinate weight
RestrictionMap coordinate_projection(int dim, const std::vector<int>& keep);

struct BranchingResult {
  std::map<Weight, long long, WeightLess> mult;

  long long at(const Weight& w) const;
  long long total_dim(const RootSystemData& target) const;
};

// so(N) -> so(N-1) by interlacing. Target coordinates: D_k for N = 2k+1, B_{k-1} for N = 2k
// (so(2) is one torus coordinate).
BranchingResult branch_so(int N, const Weight& lambda);

// U(n) -> U(1) x U(n-1), the U(1) on the first coordinate. Keys are (t; c_1..c_{n-1}).
BranchingResult branch_u(const std::vector<long long>& lambda);

// F_m(l; q_1..q_m); zero capacities allowed, zero for l < 0 or l > sum q
long long count_ballbox(long long l, const std::vector<long long>& caps);

// [Res rho : mu] for sp(n) -> sp(n-1) + sp(1); rho = (a_1..a_n), mu = (b_1..b_{n-1}; b_n)
long long branch_sp_lepowsky(const std::vector<long long>& rho, const std::vector<long long>& mu);
// every mu with non-zero multiplicity, as a BranchingResult over C_{n-1} + C_1
BranchingResult branch_sp_full(const std::vector<long long>& rho);

struct KostantMemo;

struct BranchingSetup {
  std::string name;
  RootSystemData K;
  RootSystemData H;
  RestrictionMap restriction;
  std::vector<Weight> sigma;     // restricted K roots minus H roots, with multiplicity
  std::vector<Rat> functional;   // strictly positive on sigma
  std::shared_ptr<KostantMemo> memo;
};

// "g2-su3", "spin7-g2", "spin9-spin7"
BranchingSetup kostant_setup(const std::string& pair);
std::vector<std::string> kostant_pairs();

long long kostant_partition(const BranchingSetup& setup, const Weight& nu);
// independent path: coefficient of the truncated product of 1/(1 - x^s)
long long kostant_partition_series(const BranchingSetup& setup, const Weight& nu);
// brute force: every multiset of at most max_parts members of sigma, tallied by its sum
std::map<Weight, long long, WeightLess> kostant_enumerate(const BranchingSetup& setup, int max_parts);
// upper bound on the number of summands in any decomposition of nu
long long kostant_height(const BranchingSetup& setup, const Weight& nu);

long long kostant_branch(const BranchingSetup& setup, const Weight& rho, const Weight& mu);

// Restrict the Freudenthal table of rho and peel highest weights of H, lex-maximal first.
BranchingResult oracle_branch(const RootSystemData& K, const Weight& rho, const RestrictionMap& restriction,
                              const RootSystemData& H, std::size_t bound = oracle_bound());

}  // namespace spherepair

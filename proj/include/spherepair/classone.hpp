#pragma once

#include "spherepair/branching.hpp"
#include "spherepair/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spherepair {

// The ten families of transitive, almost effective actions on spheres.
enum class PairKind { SO, SU, U, Sp, SpSp1, SpU1, G2, Spin7, Spin9, U1 };
enum class RepType { Real, Complex, Quaternionic };
enum class Field { R, C, H };

std::string rep_type_name(RepType t);
std::string field_name(Field f);

struct SphericalPair {
  PairKind kind = PairKind::SO;
  int n = 1;  // rank parameter (ignored for G2, Spin7, Spin9, U1)
  int m = 0;  // twist of U(n-1)_m and Sp(n-1) x U(1)_m

  int sphere_dim() const;
  std::string K_name() const;
  std::string H_name() const;
  std::string name() const;      // "SO(5)/SO(4)"
  std::string selector() const;  // "so:5"
};

// Validates ranges (SO n>=3, SU n>=3, U n>=2, Sp* n>=1, SpU1 m != 0); throws UnknownSelector.
SphericalPair make_pair(PairKind kind, int n = 1, int m = 0);
// "so:N", "su:N", "u:N:M", "sp:N", "spsp1:N", "spu1:N:M", "g2", "spin7", "spin9", "u1"
SphericalPair parse_pair(const std::string& selector);
std::string pair_selector_help();
// One representative per family, used by the CLI listing and the tests.
std::vector<SphericalPair> registered_pairs();

// Root system of K in the coordinates used for its highest weights:
// SO -> B/D (e-coords), SU -> A, U -> U, Sp -> C, SpSp1 -> C_n + C_1, SpU1 -> C_n + T_1 (last coord k),
// G2 -> G2, Spin7 -> B3, Spin9 -> B4, U1 -> T_1.
RootSystemData k_root_system(const SphericalPair& p);

struct ClassOneParams {
  long long a = 0, b = 0, k = 0;
  bool operator==(const ClassOneParams& o) const { return a == o.a && b == o.b && k == o.k; }
};

// the row constraints of the classification, including (S) for Sp(n) x U(1)
bool table1_admits(const SphericalPair& p, const ClassOneParams& q);
Weight table1_weight(const SphericalPair& p, const ClassOneParams& q);
// inverse of table1_weight on admitted parameters
std::optional<ClassOneParams> table1_params(const SphericalPair& p, const Weight& rho);

struct KernelTag {
  std::string text;          // "" when trivial
  bool circle_flag = false;  // a Z_0 factor read as U(1)
};

struct ClassOneRecord {
  SphericalPair pair;
  ClassOneParams params;
  Weight highest_weight;
  long long dim = 0;
  RepType type = RepType::Real;
  KernelTag kernel;
  long long m0 = 0;
  std::string noneffective;  // set when the kernel contains a positive-dimensional factor

  std::string weight_label() const;
};

// closed-form record for admitted parameters; throws std::invalid_argument otherwise
ClassOneRecord make_record(const SphericalPair& p, const ClassOneParams& q);

// Trivial H-multiplicity through the branching engines (interlacing, Lepowsky, Kostant).
long long trivial_multiplicity(const SphericalPair& p, const Weight& rho);
// Same quantity by Freudenthal restriction and peeling; throws OracleRefused above the bound.
long long trivial_multiplicity_oracle(const SphericalPair& p, const Weight& rho, std::size_t bound = oracle_bound());

// every dominant K weight in the enumeration box for coefficient bound c
std::vector<Weight> candidate_weights(const SphericalPair& p, long long c);
// admitted parameters inside the same box
std::vector<ClassOneParams> table1_parameters(const SphericalPair& p, long long c);

// Branching-computed class one records in the box, checked against the closed form
// (throws InternalInconsistency on any disagreement).
std::vector<ClassOneRecord> classify_pair(const SphericalPair& p, long long coeff_bound);

long long classone_dimension(const ClassOneRecord& r);
std::pair<RepType, KernelTag> type_and_kernel(const ClassOneRecord& r);

struct RealForm {
  long long real_degree = 0;
  std::string complexification;  // "mu", "mu + mu*", "mu + mu"
  long long real_m0 = 0;
  int diagram_case = 0;  // 1: real type, m0 = 1; 2: not real, real m0 = 2; 3: otherwise
};
RealForm realify(const ClassOneRecord& r);

// Type of any irreducible K-representation from its highest weight: self-duality of lambda and the
// parity of <lambda, 2 delta-check> (Frobenius-Schur indicator).
RepType frobenius_schur_type(const SphericalPair& p, const Weight& lambda);

// Torus points x (exp(2 pi i x) in K) forming a finite central subgroup that contains the
// central part of the kernel of the representation with the given summands.
// nullopt: a circle in the centre acts trivially on every summand.
std::optional<std::vector<Weight>> central_probe(const SphericalPair& p, const std::vector<Weight>& summands);
// name of a simple or circle factor of K acting trivially on every summand, "" if none
std::string trivial_factor(const SphericalPair& p, const std::vector<Weight>& summands);
bool acts_trivially(const SphericalPair& p, const Weight& lambda, const Weight& x);

struct DiagramCandidate {
  ClassOneRecord mu;
  std::vector<Weight> tau;  // highest weights of the irreducible summands of tau
  int alpha = 1;
  Field field = Field::R;
  int n = 0;  // G = SO(n), U(n) or Sp(n)

  int k() const { return mu.pair.sphere_dim(); }
  long long mu_degree() const;   // l over the field
  long long tau_degree() const;  // r over the field
  long long m() const { return tau_degree() + alpha * mu_degree(); }
};

struct Admissibility {
  bool accepted = false;
  std::string reason;
  bool defining_rep = false;
};
Admissibility check_diagram_admissible(const DiagramCandidate& c);

// Tables 1-4 and the quaternionic list as transcribed rows; renderers live with the CLI.
struct TableData {
  std::string caption;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
TableData classification_table(int which);  // 1, 2, 3, 4, or 5 for the quaternionic list
// "markdown" or "csv"; byte-stable
std::string render_table(const TableData& t, const std::string& format);

// A class one representation found by scanning small ranks, with its degree over the field.
struct SmallRep {
  SphericalPair pair;
  ClassOneParams params;
  RepType type;
  long long degree;  // l in Table 3 (real), Table 4 (complex) or the quaternionic list
  long long bound;   // right-hand side of the degree inequality
};
// Scan of every registered family with rank parameter <= n_max and twist |m| <= 2, keeping
// class one representations below the degree threshold of the given field.
std::vector<SmallRep> enumerate_small_reps(Field f, int n_max);

}  // namespace spherepair

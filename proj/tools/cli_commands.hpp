#pragma once

#include "cli.hpp"
#include "cli_output.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace spherepair::cli {

struct ClassifyOptions {
  std::string pair;
  long long max = 3;
};
struct BranchOptions {
  std::string engine;  // so:N, u:N, sp:N or a Kostant pair
  std::string weight, dynkin, target;
  bool oracle = false;
};
struct DimsOptions {
  std::vector<std::string> pairs;  // empty: one representative per family
  long long max = 5;
};
struct TablesOptions {
  int which = 1;
};
struct CurvOptions {
  std::string example = "so3-l5-n7";
  std::string profile = "cos";
  double L = 1;
  int samples = 50;
};
struct ObstructOptions {
  std::string profile = "cos";
  double L = 1;
  double gamma_min = 1e-3, gamma_max = 1e6;
  int gammas = 37;
  int grid = 400;
};
struct WeylOptions {
  std::string example = "so3-l5-n7";
};

// each returns an ExitCode and lets library exceptions propagate
int cmd_classify(const ClassifyOptions& o, const Format& f, std::ostream& out);
int cmd_branch(const BranchOptions& o, const Format& f, std::ostream& out);
int cmd_dims(const DimsOptions& o, const Format& f, std::ostream& out);
int cmd_tables(const TablesOptions& o, const Format& f, std::ostream& out);
int cmd_curv_verify(const CurvOptions& o, const Format& f, std::ostream& out);
int cmd_obstruct(const ObstructOptions& o, const Format& f, std::ostream& out);
int cmd_weyl(const WeylOptions& o, const Format& f, std::ostream& out);
int cmd_list(const Format& f, std::ostream& out);

}  // namespace spherepair::cli

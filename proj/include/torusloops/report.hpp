#pragma once

#include "torusloops/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusloops {

enum class Verdict { GapExists, FullBasis };
std::string to_string(Verdict v);

struct ReproductionReport {
  Rational mu;
  int action_count = 0;
  std::vector<std::string> actions;
  std::vector<std::string> expressions;  // basis expression of each action
  int circle_representable_rank = 0;
  int pi1_rank_input = 5;
  std::string pi1_rank_source;
  Verdict verdict = Verdict::GapExists;
  bool seidel_distinctness = false;
  std::optional<DistinctnessReport> seidel;
  std::vector<std::string> warnings;
  bool lattice_ok = false;
};

ReproductionReport theorem_main(const Rational& mu, const Rational& floor);

json to_json(const ReproductionReport& r);
std::string to_markdown(const ReproductionReport& r);

}  // namespace torusloops

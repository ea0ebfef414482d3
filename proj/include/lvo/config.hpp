#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lvo/lattice.hpp"

namespace lvo {

// Flat key-value model description with one section per concern. Values are
// strings resolved by the declared backend.
struct ModelConfig {
  SplitSpace space{1, 1};
  Backend backend = Backend::rational_backend();
  std::vector<std::string> generator_rows;       // comma-separated token rows
  std::optional<mpq_class> r2;                   // exact backends
  std::optional<double> r2_float;                // float backend
  int energy = 6;
  int series_order = 3;
  int box_radius = 2;
  std::vector<std::string> suites{"all"};
  size_t state_budget = 500000;
  std::string echo;  // verbatim config text

  bool wants(const std::string& suite) const;
};

ModelConfig parse_config_text(const std::string& text);
ModelConfig parse_config_file(const std::string& path);

// Evaluate one generator token (products/quotients/sums of rationals, R and
// sqrt2/sqrt(q) factors) in the declared backend.
Scalar eval_token(const std::string& token, const ModelConfig& cfg);

Lattice build_config_lattice(const ModelConfig& cfg);

}  // namespace lvo

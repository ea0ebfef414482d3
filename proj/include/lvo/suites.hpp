#pragma once

#include "lvo/config.hpp"
#include "lvo/parallel.hpp"
#include "lvo/report.hpp"

namespace lvo {

// Named verification suites over one configured model. The lattice is built
// once by the caller (configuration errors surface there).
Report run_lattice_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);
Report run_cocycle_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);
Report run_fock_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);
Report run_vertex_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);
Report run_net2d_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);
Report run_braidcat_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);
Report run_classify_suite(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);

std::vector<Report> run_selected_suites(const ModelConfig& cfg, const Lattice& lat,
                                        par::Exec ex);

// Machine-readable model tables for cross-implementation comparison: grade
// dimensions and exact Gram determinants of the configured modules, plus the
// bigraded character table of the extension.
std::string model_tables_json(const ModelConfig& cfg, const Lattice& lat, par::Exec ex);

}  // namespace lvo

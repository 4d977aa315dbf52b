#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdunkl/frqdt2d.hpp"
#include "qdunkl/report.hpp"

namespace qdunkl {

// Shared configuration for the verification suites.
struct SuiteConfig {
    TransformSpec spec;          // defaults: chi = (0.5, 1.0) set in make_default()
    int N = 96;                  // quadrature size per axis
    int nmax = 6;                // band limit for random fields / eigen checks
    int mmax = 6;
    int n_random = 20;           // random fields for the randomized suites
    std::uint64_t seed = 20240817;
    int threads = 0;

    double tol_eigen = 1e-7;
    double tol_plancherel = 1e-7;
    double tol_inversion = 1e-7;
    double tol_composition = 1e-6;
    double tol_gaussian = 1e-7;
    double tol_bochner = 1e-6;
    double tol_heisenberg = 1e-6;
    double tol_hankel = 1e-7;

    static SuiteConfig make_default();
};

// Suite names accepted by run_suite: plancherel, inversion, composition,
// bochner, eigen, gaussian, heisenberg, higher_order, frqft, bounds.
const std::vector<std::string>& suite_names();

std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace qdunkl

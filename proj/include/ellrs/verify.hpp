#pragma once

#include <string>
#include <vector>

#include "ellrs/oracles.hpp"

namespace ellrs {

using oracle::OracleReport;

/// Truncated-operator and spectrum checks over (g, p) in {0.7, 1.3} x {0, 0.4}.
std::vector<OracleReport> spectrum_suite(int n, int m);

/// Ring-level checks (routes, S-matrix, ring axioms, LR properties) over
/// the same grid.
std::vector<OracleReport> ring_suite(int n, int m);

/// "limits", "ring", "spectrum" or "all". Throws InvalidArgument otherwise.
std::vector<OracleReport> run_suite(const std::string& suite, int n, int m);

}  // namespace ellrs

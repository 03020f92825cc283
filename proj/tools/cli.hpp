#pragma once

#include "fredholm/galerkin.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fredholm::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kSolverError = 2 };

/// Runs the command line (args excludes the program name). Reports to `out`
/// or the --out file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-width rendering used by every CSV/report: %.{digits}g, with -0 as 0.
std::string format_number(double value, int digits = 10);

void write_error_table_csv(const std::vector<ErrorRow>& rows, std::ostream& os);
void write_convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& os);

/// CSV with header x,B0,...,Bn and `samples` equispaced rows over [a, b].
void emit_basis_samples(int n, double a, double b, int samples, std::ostream& os);

}  // namespace fredholm::cli

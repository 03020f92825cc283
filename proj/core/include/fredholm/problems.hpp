#pragma once

#include "fredholm/galerkin.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fredholm {

/// Names accepted by builtin(): example1 .. example4.
const std::vector<std::string>& builtin_names();

/// The four worked equations, each written as phi - int k phi dt = f,
/// i.e. coefficient 1 and lambda -1. Throws UnknownBuiltin.
FredholmProblem builtin(std::string_view name);

/// Parses the `key = value` problem format:
///   interval_a, interval_b, coefficient, lambda, kernel, rhs, exact (optional)
/// Blank lines and lines starting with '#' are ignored.
/// Throws MissingKey, DuplicateKey, ExpressionError, BadInterval.
FredholmProblem parse_problem(std::string_view text);

/// Reads and parses a problem file; throws InputError if unreadable.
FredholmProblem load_problem(const std::filesystem::path& path);

/// Renders a problem in the file format; parse_problem() reads it back.
std::string write_problem(const FredholmProblem& problem);

}  // namespace fredholm

#include "fredholm/problems.hpp"

#include "fredholm/errors.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace fredholm {

namespace {

struct BuiltinSource {
  std::string_view name;
  std::string_view kernel;
  std::string_view rhs;
  std::string_view a;
  std::string_view b;
  std::string_view exact;
};

constexpr std::array<BuiltinSource, 4> kBuiltins{{
    {"example1", "x*t + x^2*t^2", "1", "-1", "1", "1 + 10/9*x^2"},
    {"example2", "x^4 - t^4", "x", "-1", "1", "x"},
    {"example3", "t*x^2 + x*t^2", "x", "0", "1", "180/119*x + 80/119*x^2"},
    {"example4", "2*exp(x)*exp(t)", "exp(x)", "0", "1", "exp(x)/(2 - e^2)"},
}};

constexpr std::array<std::string_view, 7> kKeys{"interval_a", "interval_b", "coefficient", "lambda",
                                                 "kernel",     "rhs",        "exact"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& b : kBuiltins) out.emplace_back(b.name);
    return out;
  }();
  return names;
}

FredholmProblem builtin(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name != name) continue;
    return FredholmProblem(ExprAst::parse("1"), Scalar::parse("-1"), ExprAst::parse(b.kernel), ExprAst::parse(b.rhs),
                           Scalar::parse(b.a), Scalar::parse(b.b), ExprAst::parse(b.exact));
  }
  std::string valid;
  for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw UnknownBuiltin("unknown builtin '" + std::string(name) + "' (valid: " + valid + ")");
}

FredholmProblem parse_problem(std::string_view text) {
  struct Entry {
    std::string value;
    std::size_t line;
  };
  std::map<std::string, Entry, std::less<>> entries;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ExpressionError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ExpressionError("unknown key '" + key + "'", line_no);
    if (value.empty()) throw ExpressionError("empty value for '" + key + "'", line_no);
    if (entries.contains(key)) throw DuplicateKey(key, line_no);
    entries.emplace(key, Entry{std::string(value), line_no});
  }

  for (std::string_view key : kKeys)
    if (key != "exact" && !entries.contains(key)) throw MissingKey(std::string(key));

  auto expr = [&](const std::string& key) {
    const Entry& e = entries.at(key);
    try {
      return ExprAst::parse(e.value);
    } catch (const InputError& err) {
      throw ExpressionError(key + ": " + err.what(), e.line);
    }
  };
  auto scalar = [&](const std::string& key) {
    const Entry& e = entries.at(key);
    try {
      return Scalar::parse(e.value);
    } catch (const Error& err) {
      throw ExpressionError(key + ": " + err.what(), e.line);
    }
  };

  ExprAst coefficient = expr("coefficient");
  ExprAst kernel = expr("kernel");
  ExprAst rhs = expr("rhs");
  Scalar lambda = scalar("lambda");
  Scalar a = scalar("interval_a");
  Scalar b = scalar("interval_b");
  std::optional<ExprAst> exact;
  if (entries.contains("exact")) exact = expr("exact");

  auto require_x_only = [&](const ExprAst& ast, const std::string& key) {
    if (ast.uses(Variable::T)) throw ExpressionError(key + " must be a function of x only", entries.at(key).line);
  };
  require_x_only(coefficient, "coefficient");
  require_x_only(rhs, "rhs");
  if (exact) require_x_only(*exact, "exact");

  return FredholmProblem(std::move(coefficient), std::move(lambda), std::move(kernel), std::move(rhs), std::move(a),
                         std::move(b), std::move(exact));
}

FredholmProblem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read problem file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string write_problem(const FredholmProblem& problem) {
  std::ostringstream os;
  os << "interval_a = " << problem.a().text() << "\n";
  os << "interval_b = " << problem.b().text() << "\n";
  os << "coefficient = " << problem.coefficient().source() << "\n";
  os << "lambda = " << problem.lambda().text() << "\n";
  os << "kernel = " << problem.kernel().source() << "\n";
  os << "rhs = " << problem.rhs().source() << "\n";
  if (problem.exact()) os << "exact = " << problem.exact()->source() << "\n";
  return os.str();
}

}  // namespace fredholm

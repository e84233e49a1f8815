// fracsym: solve the fractional heat equation on the unit cube, tabulate
// errors, classify symmetry generators, and run verification sweeps.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fracsym/fracsym.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSingular = 3;

const char* const kExampleF = "2,1,3,3;-6,2,1,3;-6,2,3,1";
const char* const kExampleExact = "1,2,3,3";

int exit_for(fracsym_status status) {
  switch (status) {
    case FRACSYM_OK: return kExitOk;
    case FRACSYM_ERR_SINGULAR: return kExitSingular;
    case FRACSYM_ERR_DOMAIN:
    case FRACSYM_ERR_PARSE:
    case FRACSYM_ERR_ZERO_ELEMENT:
    case FRACSYM_ERR_PARAMETER_MISMATCH:
    case FRACSYM_ERR_SIZE_LIMIT:
    case FRACSYM_ERR_INVALID_ARGUMENT:
      return kExitInvalid;
    default: return kExitCheckFailed;
  }
}

// Thrown out of a subcommand with the exit code to return.
struct Failure {
  int code;
};

void check(fracsym_status status, const char* what) {
  if (status == FRACSYM_OK) return;
  std::cerr << "fracsym: " << what << ": " << fracsym_status_name(status)
            << ": " << fracsym_last_error() << "\n";
  throw Failure{exit_for(status)};
}

[[noreturn]] void invalid(const std::string& message) {
  std::cerr << "fracsym: " << message << "\n";
  throw Failure{kExitInvalid};
}

// RFC 4180 quoting for free-text fields.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes to a sibling temp file, then renames over the target.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) invalid("cannot open " + tmp.string() + " for writing");
    out << payload;
    out.flush();
    if (!out) invalid("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    invalid("cannot move output into place at " + path);
  }
}

struct SliceArg {
  fracsym_axis axis = FRACSYM_AXIS_T;
  char name = 't';
  double value = 0.5;
};

SliceArg parse_slice(const std::string& text) {
  const auto eq = text.find('=');
  if (eq != 1 || text.size() < 3) invalid("slice must look like t=0.5, x=0.5 or y=0.5");
  SliceArg s;
  s.name = text[0];
  switch (s.name) {
    case 't': s.axis = FRACSYM_AXIS_T; break;
    case 'x': s.axis = FRACSYM_AXIS_X; break;
    case 'y': s.axis = FRACSYM_AXIS_Y; break;
    default: invalid("slice axis must be t, x or y");
  }
  try {
    std::size_t used = 0;
    s.value = std::stod(text.substr(2), &used);
    if (used != text.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    invalid("bad slice value in '" + text + "'");
  }
  if (!(s.value >= 0.0 && s.value <= 1.0)) invalid("slice value must lie in [0,1]");
  return s;
}

struct SolveOptions {
  double alpha = 1.0;
  double beta = 2.0;
  int degree = 4;
  std::string f = kExampleF;
  int grid_n = 11;
  std::string slice;
  std::string out;
  bool dump_matrices = false;
};

using SolutionPtr = std::unique_ptr<fracsym_solution, decltype(&fracsym_solution_free)>;

SolutionPtr run_solver(const SolveOptions& o) {
  fracsym_solution* raw = nullptr;
  check(fracsym_solve(o.alpha, o.beta, o.degree, o.f.c_str(), &raw), "solve");
  return {raw, &fracsym_solution_free};
}

void dump_matrix(const fracsym_solution* sol, fracsym_matrix_kind kind,
                 const char* name) {
  size_t rows = 0, cols = 0;
  check(fracsym_solution_matrix(sol, kind, &rows, &cols, nullptr, 0), name);
  std::vector<double> data(rows * cols);
  check(fracsym_solution_matrix(sol, kind, &rows, &cols, data.data(), data.size()),
        name);
  std::cerr << name << " (" << rows << "x" << cols << ")\n";
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j)
      std::cerr << (j ? "," : "") << num(data[i * cols + j]);
    std::cerr << "\n";
  }
}

std::vector<double> slice_table(const fracsym_solution* sol, const SliceArg& s,
                                int n, const char* exact) {
  std::vector<double> grid(3 * static_cast<size_t>(n) * n);
  if (exact)
    check(fracsym_solution_error_grid(sol, exact, s.axis, s.value, n, grid.data()),
          "error grid");
  else
    check(fracsym_solution_grid(sol, s.axis, s.value, n, grid.data()), "grid");
  return grid;
}

std::string slice_csv(const std::vector<double>& grid) {
  std::ostringstream os;
  os << "coord1,coord2,value\n";
  for (size_t i = 0; i + 2 < grid.size(); i += 3)
    os << num(grid[i]) << ',' << num(grid[i + 1]) << ',' << num(grid[i + 2]) << '\n';
  return os.str();
}

int cmd_solve(const SolveOptions& o) {
  if (o.grid_n < 2) invalid("--grid-n must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  auto sol = run_solver(o);
  double residual = 0.0;
  check(fracsym_solution_residual(sol.get(), &residual), "residual");

  std::string payload;
  if (!o.slice.empty()) {
    payload = slice_csv(slice_table(sol.get(), parse_slice(o.slice), o.grid_n, nullptr));
  } else {
    std::ostringstream os;
    os << "t,x,y,u\n";
    const double h = 1.0 / (o.grid_n - 1);
    for (int i = 0; i < o.grid_n; ++i)
      for (int j = 0; j < o.grid_n; ++j)
        for (int k = 0; k < o.grid_n; ++k) {
          const double t = i * h, x = j * h, y = k * h;
          double u = 0.0;
          check(fracsym_solution_evaluate(sol.get(), t, x, y, &u), "evaluate");
          os << num(t) << ',' << num(x) << ',' << num(y) << ',' << num(u) << '\n';
        }
    payload = os.str();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(o.out, payload);

  if (o.dump_matrices) {
    dump_matrix(sol.get(), FRACSYM_MATRIX_P_ALPHA, "P_alpha");
    dump_matrix(sol.get(), FRACSYM_MATRIX_D_BETA, "D_beta");
  }
  // Summary goes to stderr so CSV on stdout stays clean.
  std::cerr << "residual_max " << num(residual) << "\n"
            << "wall_time_s " << secs << "\n";
  return kExitOk;
}

int cmd_error(const SolveOptions& o, const std::string& exact) {
  if (o.grid_n < 2) invalid("--grid-n must be at least 2");
  const SliceArg s = parse_slice(o.slice.empty() ? "t=0.5" : o.slice);
  auto sol = run_solver(o);
  const auto grid = slice_table(sol.get(), s, o.grid_n, exact.c_str());
  double worst = 0.0;
  for (size_t i = 2; i < grid.size(); i += 3) worst = std::max(worst, grid[i]);
  emit(o.out, slice_csv(grid));
  std::cerr << "max_error " << num(worst) << " at " << s.name << "=" << num(s.value)
            << "\n";
  return kExitOk;
}

int cmd_classify(const std::vector<double>& a, double alpha, double beta,
                 double eps) {
  if (a.size() != 5) invalid("classify needs exactly five coefficients a1..a5");
  fracsym_canonical_form form{};
  check(fracsym_classify(a.data(), alpha, beta, eps, &form), "classify");
  std::cout << "case " << form.case_id << "\n";
  std::cout << "representative";
  for (int i = 0; i < 5; ++i) std::cout << (i ? "," : " ") << num(form.representative[i]);
  std::cout << "\nword";
  if (form.step_count == 0) std::cout << " identity";
  for (int k = 0; k < form.step_count; ++k)
    std::cout << " exp(" << num(form.step_parameter[k]) << "*X"
              << form.step_generator[k] << ")";
  std::cout << " then scale " << num(form.sign * form.lambda) << "\n";
  return kExitOk;
}

int print_report(fracsym_report* raw, const std::string& out) {
  std::unique_ptr<fracsym_report, decltype(&fracsym_report_free)> report(
      raw, &fracsym_report_free);
  std::ostringstream os;
  os << "case,lhs,rhs,diff,tol,result,note\n";
  size_t failed = 0;
  const size_t n = fracsym_report_size(report.get());
  for (size_t i = 0; i < n; ++i) {
    fracsym_check_row row{};
    check(fracsym_report_row(report.get(), i, &row), "report row");
    if (!row.pass) ++failed;
    os << csv_field(row.label) << ',' << num(row.lhs) << ',' << num(row.rhs) << ','
       << num(row.diff) << ',' << num(row.tol) << ','
       << (row.pass ? "pass" : "fail") << ',' << csv_field(row.note) << '\n';
  }
  emit(out, os.str());
  std::cerr << (n - failed) << "/" << n << " checks passed\n";
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional heat equation: spectral solver and symmetry tools"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--alpha", solve_opts.alpha, "time order, 0 < alpha <= 1");
    sub->add_option("--beta", solve_opts.beta, "space order, 0 < beta <= 2");
    sub->add_option("--M", solve_opts.degree, "Bernstein degree, 1..12");
    sub->add_option("--f", solve_opts.f, "source terms c,p,q,r;...");
    sub->add_option("--grid-n", solve_opts.grid_n, "grid points per axis");
    sub->add_option("--out", solve_opts.out, "output CSV path (default stdout)");
  };

  auto* solve = app.add_subcommand("solve", "solve and tabulate u");
  add_solver_flags(solve);
  solve->add_option("--slice", solve_opts.slice, "tabulate one slice, e.g. t=0.5");
  solve->add_flag("--dump-matrices", solve_opts.dump_matrices,
                  "print P_alpha and D_beta to stderr");

  std::string exact = kExampleExact;
  auto* error = app.add_subcommand("error", "absolute error against an exact solution");
  add_solver_flags(error);
  error->add_option("--slice", solve_opts.slice, "slice, default t=0.5");
  error->add_option("--exact", exact, "exact solution terms c,p,q,r;...");

  std::vector<double> coeffs;
  double lie_alpha = 1.0, lie_beta = 1.0, eps = 1e-12;
  auto* classify = app.add_subcommand("classify", "reduce a generator to its optimal-system case");
  classify->add_option("coefficients", coeffs, "a1 a2 a3 a4 a5")->expected(5);
  classify->add_option("--a", coeffs, "a1,a2,a3,a4,a5")->delimiter(',')->expected(5);
  classify->add_option("--alpha", lie_alpha, "algebra parameter alpha");
  classify->add_option("--beta", lie_beta, "algebra parameter beta");
  classify->add_option("--eps", eps, "zero threshold");

  std::string mode;
  double tol = -1.0;
  bool corrupt = false;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("mode", mode, "adjoint or reduction")
      ->required()
      ->check(CLI::IsMember({"adjoint", "reduction"}));
  verify->add_option("--alpha", lie_alpha, "algebra parameter alpha (adjoint)");
  verify->add_option("--beta", lie_beta, "algebra parameter beta (adjoint)");
  verify->add_option("--tol", tol, "tolerance (adjoint 1e-12, reduction 1e-6)");
  verify->add_flag("--corrupt", corrupt, "perturb one structure constant (negative control)");
  verify->add_option("--out", verify_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*solve) return cmd_solve(solve_opts);
    if (*error) return cmd_error(solve_opts, exact);
    if (*classify) return cmd_classify(coeffs, lie_alpha, lie_beta, eps);
    if (mode == "adjoint") {
      fracsym_report* report = nullptr;
      check(fracsym_verify_adjoint(lie_alpha, lie_beta, tol < 0 ? 1e-12 : tol,
                                   corrupt ? 1 : 0, &report),
            "verify adjoint");
      return print_report(report, verify_out);
    }
    fracsym_report* report = nullptr;
    check(fracsym_verify_reduction(tol < 0 ? 1e-6 : tol, &report), "verify reduction");
    return print_report(report, verify_out);
  } catch (const Failure& f) {
    return f.code;
  }
}

#pragma once

// Command-line front end. run_command is the whole CLI as a testable
// function: argv in (program name excluded), exit status and output out.
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermon/branching.hpp"
#include "hermon/latex.hpp"
#include "hermon/serialize.hpp"
#include "hermon/verify.hpp"

namespace hermon {

struct CommandResult {
  int status = 0;
  std::string output;
};

inline CommandResult run_command(const std::vector<std::string>& argv) {
  CLI::App app{"Gel'fand-Tsetlin bases of Hermitian monogenic polynomials"};
  app.require_subcommand(1);
  std::string out_file;
  app.add_option("--out", out_file, "write output to FILE instead of stdout");

  unsigned n = 2, a = 0, b = 0, r = 1, k = 0;
  bool closed_form = false;
  std::string format = "json";
  std::string suite;

  CLI::App* basis_cmd = app.add_subcommand("basis", "print a basis of the labeled space");
  basis_cmd->add_option("--n", n, "number of complex variables")->required();
  basis_cmd->add_option("--a", a, "holomorphic degree")->required();
  basis_cmd->add_option("--b", b, "antiholomorphic degree")->required();
  basis_cmd->add_option("--r", r, "spinor grade")->required();
  basis_cmd->add_flag("--closed-form", closed_form,
                      "use the closed-form two-variable basis (requires --n 2)");
  basis_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "latex"}));

  CLI::App* branch_cmd =
      app.add_subcommand("branch", "list branching children and embedding factors");
  branch_cmd->add_option("--n", n)->required();
  branch_cmd->add_option("--a", a)->required();
  branch_cmd->add_option("--b", b)->required();
  branch_cmd->add_option("--r", r)->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a certification suite");
  {
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify_cmd->add_option("--suite", suite, "suite to run")
        ->required()
        ->check(CLI::IsMember(allowed));
  }
  unsigned opt_a_max = 0, opt_b_max = 0, opt_n = 0;
  CLI::Option* a_max_opt = verify_cmd->add_option("--a-max", opt_a_max, "override degree bound");
  CLI::Option* b_max_opt = verify_cmd->add_option("--b-max", opt_b_max, "override degree bound");
  CLI::Option* n_opt = verify_cmd->add_option("--n", opt_n, "override variable count");

  CLI::App* dims_cmd = app.add_subcommand("dims", "dimension table of the degree-k summands");
  dims_cmd->add_option("--n", n)->required();
  dims_cmd->add_option("--k", k)->required();

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int code = app.exit(e, os, os);
    return {code == 0 ? 0 : 2, os.str()};
  }

  std::ostringstream out;
  int status = 0;
  try {
    if (app.got_subcommand(basis_cmd)) {
      if (closed_form && n != 2) {
        return {2, "error: --closed-form requires --n 2\n"};
      }
      std::vector<SpinorPolynomial> elements;
      if (closed_form) {
        for (auto& e : basis_dim2(a, b, r)) elements.push_back(std::move(e.element));
      } else {
        for (auto& node : build_basis(n, a, b, r)) elements.push_back(std::move(node.element));
      }
      for (const auto& e : elements)
        out << (format == "latex" ? emit_latex(e) : serialize(e)) << "\n";
    } else if (app.got_subcommand(branch_cmd)) {
      for (const auto& [bc, op] : branch_children(n, a, b, r))
        out << "case " << to_string(bc.tag) << ": child (" << n - 1 << "," << bc.c << ","
            << bc.d << "," << bc.s << ")  factor " << emit_latex(op) << "\n";
    } else if (app.got_subcommand(verify_cmd)) {
      SuiteOptions opt;
      if (a_max_opt->count()) opt.a_max = opt_a_max;
      if (b_max_opt->count()) opt.b_max = opt_b_max;
      if (n_opt->count()) opt.n = opt_n;
      std::vector<std::string> to_run =
          suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      for (const auto& name : to_run) {
        CheckReport rep = run_suite(name, opt);
        all_ok = all_ok && rep.ok();
        out << format_report(name, rep);
      }
      status = all_ok ? 0 : 1;
    } else if (app.got_subcommand(dims_cmd)) {
      unsigned long long total = 0;
      for (unsigned aa = 0; aa <= k; ++aa) {
        unsigned bb = k - aa;
        for (unsigned rr = 0; rr <= n; ++rr) {
          unsigned long long d = dimension(n, aa, bb, rr);
          if (d == 0) continue;
          out << "summand (a=" << aa << ",b=" << bb << ",r=" << rr << ") dim " << d << "\n";
          total += d;
        }
      }
      if (k >= 1)
        for (unsigned aa = 0; aa + 1 <= k; ++aa) {
          unsigned bb = k - 1 - aa;
          for (unsigned rr = 1; rr + 1 <= n; ++rr) {
            unsigned long long d = dimension(n, aa, bb, rr);
            if (d == 0) continue;
            out << "embedded summand (a=" << aa << ",b=" << bb << ",r=" << rr << ") dim " << d
                << "\n";
            total += d;
          }
        }
      std::size_t oracle_dim = monogenic_kernel_dim(n, k);
      out << "total " << total << "\n";
      out << "kernel dimension " << oracle_dim << "\n";
      status = (total == oracle_dim) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }

  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) return {1, "error: cannot open output file " + out_file + "\n"};
    f << out.str();
    return {status, ""};
  }
  return {status, out.str()};
}

}  // namespace hermon

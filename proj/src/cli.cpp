#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hamtorus/census.hpp"
#include "hamtorus/counting.hpp"
#include "hamtorus/diagonals.hpp"
#include "hamtorus/errors.hpp"
#include "hamtorus/hamiltonicity.hpp"

namespace hamtorus {
namespace {

void print_witness(std::ostream& out, const HamWitness& w) {
  out << w.orientation.str() << '\n';
  for (const auto& c : w.cycle) out << c.row << ',' << c.col << '\n';
}

std::int64_t run_diag(const std::string& method, std::int64_t n, std::int64_t m) {
  GridParams grid(n, m);
  if (method == "naive") return diag_count_naive(n, m);
  if (method == "string") return diag_count_string(n, m);
  if (method == "reduction") return diag_count_reduction(n, m);
  return diag_count_tree(n, m);
}

int run_ham(std::ostream& out, std::ostream& err, const std::string& method, std::int64_t n,
            std::int64_t m, bool witness) {
  GridParams grid(n, m);
  if (!in_stated_domain(n, m)) {
    err << "note: (" << n << "," << m << ") is outside the stated domain n, m > 1\n";
  }
  std::optional<HamWitness> w;
  bool ham = false;
  if (method == "brute") {
    auto r = is_hamiltonian_brute(n, m, witness);
    ham = r.hamiltonian;
    w = std::move(r.witness);
  } else {
    if (witness) {
      w = fast_witness(n, m);
      ham = w.has_value();
    } else {
      ham = is_hamiltonian_fast(n, m);
    }
  }
  out << (ham ? "true" : "false") << '\n';
  if (w) print_witness(out, *w);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonicity and diagonal counts of grid graphs on the two-holed torus",
               "hamtorus"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("-j,--jobs", jobs, "Worker threads for table and census")
      ->check(CLI::Range(1U, 1024U));

  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string method = "auto";

  auto* diag = app.add_subcommand("diag", "Number of diagonals of G_{N,M,2}");
  diag->add_option("N", n)->required();
  diag->add_option("M", m)->required();
  diag->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "naive", "string", "reduction", "tree"}));

  auto* ham = app.add_subcommand("ham", "Decide whether G_{N,M,2} is Hamiltonian");
  bool witness = false;
  ham->add_option("N", n)->required();
  ham->add_option("M", m)->required();
  ham->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "link"}));
  ham->add_flag("--witness", witness, "Print an orientation and its cycle");

  std::int64_t max = 0;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Non-Hamiltonian pairs with several diagonals");
  table->add_option("--max", max, "Largest m")->required();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* census = app.add_subcommand("census", "Distribution of diagonal counts");
  census->add_option("--max", max, "Horizon h")->required();
  census->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::int64_t verify_max = 10;
  auto* verify = app.add_subcommand("verify", "Run the cross-check suites");
  verify->add_option("--max", verify_max, "Size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (*diag) {
      out << run_diag(method, n, m) << '\n';
    } else if (*ham) {
      return run_ham(out, err, method, n, m, witness);
    } else if (*table) {
      const auto rows = exceptional_pairs(max, jobs);
      format == "json" ? write_json(out, rows) : write_csv(out, rows);
    } else if (*census) {
      const auto report = diag_distribution(max, jobs);
      format == "json" ? write_json(out, report) : write_csv(out, report);
    } else if (*verify) {
      if (verify_max < 1) throw InputError("--max must be positive");
      int failures = 0;
      for (const auto& suite : verify_suites(verify_max)) {
        const auto problem = suite.run();
        if (problem.empty()) {
          out << "PASS " << suite.name << '\n';
        } else {
          out << "FAIL " << suite.name << ": " << problem << '\n';
          ++failures;
        }
      }
      return failures ? 2 : 0;
    }
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hamtorus

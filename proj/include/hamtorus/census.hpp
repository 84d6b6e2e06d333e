#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hamtorus {

struct PairRecord {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t diag = 0;
  bool hamiltonian = false;
  std::string method;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

/// Coprime n < m <= max_m with at least two diagonals and no Hamiltonian
/// cycle, in lexicographic (n, m) order. Work is split by n over `workers`
/// threads; the result does not depend on the worker count.
std::vector<PairRecord> exceptional_pairs(std::int64_t max_m, unsigned workers = 1);

/// Counts of coprime pairs m > n with m <= h by diagonal count.
struct DistributionReport {
  std::int64_t h = 0;
  std::int64_t pairs = 0;
  std::int64_t count1 = 0;
  std::int64_t count2 = 0;
  std::int64_t count3 = 0;

  double p1() const { return pairs ? static_cast<double>(count1) / pairs : 0.0; }
  double p2() const { return pairs ? static_cast<double>(count2) / pairs : 0.0; }
  double p3() const { return pairs ? static_cast<double>(count3) / pairs : 0.0; }
  // max_k |P_k - limit_k| against 4/9, 1/3, 2/9.
  double max_deviation() const;
};

DistributionReport diag_distribution(std::int64_t h, unsigned workers = 1);

void write_csv(std::ostream& out, const std::vector<PairRecord>& records);
/// One JSON object per line.
void write_json(std::ostream& out, const std::vector<PairRecord>& records);
void write_csv(std::ostream& out, const DistributionReport& report);
void write_json(std::ostream& out, const DistributionReport& report);

/// One named cross-check; `run` returns an empty string on success or a
/// description of the first disagreement.
struct VerifySuite {
  std::string name;
  std::function<std::string()> run;
};

/// Cross-check suites bounded by `max_size`: tier equivalence, crossing
/// string agreement, counting equivalence, link/trace equivalence, the
/// period identity, periodicity and the tree rules.
std::vector<VerifySuite> verify_suites(std::int64_t max_size);

/// Command-line entry point. Returns 0 on success, 1 on usage or domain
/// errors, 2 when two computations that must agree do not.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hamtorus

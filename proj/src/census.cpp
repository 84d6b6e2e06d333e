#include "hamtorus/census.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>

#include "hamtorus/counting.hpp"
#include "hamtorus/diagonals.hpp"
#include "hamtorus/errors.hpp"
#include "hamtorus/hamiltonicity.hpp"
#include "json.hpp"

namespace hamtorus {
namespace {

// Runs body(n) for n = 1..last, split round-robin over worker threads.
template <typename Result, typename Body>
std::vector<Result> for_each_n(std::int64_t last, unsigned workers, Body body) {
  std::vector<Result> results(static_cast<std::size_t>(std::max<std::int64_t>(last, 0)));
  workers = std::max(1U, workers);
  auto run = [&](unsigned w) {
    for (std::int64_t n = 1 + w; n <= last; n += workers) results[n - 1] = body(n);
  };
  if (workers == 1) {
    run(0);
    return results;
  }
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  threads.clear();
  return results;
}

}  // namespace

std::vector<PairRecord> exceptional_pairs(std::int64_t max_m, unsigned workers) {
  if (max_m < 2) throw InputError("table bound must be at least 2");
  auto per_n = for_each_n<std::vector<PairRecord>>(max_m - 1, workers, [max_m](std::int64_t n) {
    std::vector<PairRecord> rows;
    for (std::int64_t m = n + 1; m <= max_m; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto diag = diag_count_tree(n, m);
      if (diag < 2) continue;
      if (!is_hamiltonian_fast(n, m)) rows.push_back({n, m, diag, false, "link"});
    }
    return rows;
  });
  std::vector<PairRecord> out;
  for (auto& rows : per_n) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

double DistributionReport::max_deviation() const {
  return std::max({std::abs(p1() - 4.0 / 9.0), std::abs(p2() - 1.0 / 3.0),
                   std::abs(p3() - 2.0 / 9.0)});
}

DistributionReport diag_distribution(std::int64_t h, unsigned workers) {
  if (h < 2) throw InputError("census horizon must be at least 2");
  using Counts = std::array<std::int64_t, 4>;
  auto per_n = for_each_n<Counts>(h - 1, workers, [h](std::int64_t n) {
    Counts counts{};
    for (std::int64_t m = n + 1; m <= h; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const auto diag = diag_count_tree(n, m);
      if (diag < 1 || diag > 3) {
        throw InconsistencyError("coprime pair with " + std::to_string(diag) + " diagonals");
      }
      ++counts[0];
      ++counts[diag];
    }
    return counts;
  });
  DistributionReport report;
  report.h = h;
  for (const auto& c : per_n) {
    report.pairs += c[0];
    report.count1 += c[1];
    report.count2 += c[2];
    report.count3 += c[3];
  }
  return report;
}

void write_csv(std::ostream& out, const std::vector<PairRecord>& records) {
  out << "n,m,diag,hamiltonian\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.m << ',' << r.diag << ',' << (r.hamiltonian ? "true" : "false")
        << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<PairRecord>& records) {
  for (const auto& r : records) {
    const nlohmann::ordered_json obj = {{"n", r.n},
                                        {"m", r.m},
                                        {"diag", r.diag},
                                        {"hamiltonian", r.hamiltonian},
                                        {"method", r.method}};
    out << obj.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const DistributionReport& r) {
  out << "h,pairs,diag1,diag2,diag3,P1,P2,P3\n";
  out << r.h << ',' << r.pairs << ',' << r.count1 << ',' << r.count2 << ',' << r.count3 << ','
      << r.p1() << ',' << r.p2() << ',' << r.p3() << '\n';
}

void write_json(std::ostream& out, const DistributionReport& r) {
  const nlohmann::ordered_json obj = {{"h", r.h},           {"pairs", r.pairs},
                                      {"diag1", r.count1},  {"diag2", r.count2},
                                      {"diag3", r.count3},  {"P1", r.p1()},
                                      {"P2", r.p2()},       {"P3", r.p3()}};
  out << obj.dump() << '\n';
}

namespace {

std::string pair_text(std::int64_t n, std::int64_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::int64_t tree_pair_diag(TreePair p) { return diag_count_naive(p.small, p.big); }

}  // namespace

std::vector<VerifySuite> verify_suites(std::int64_t k) {
  std::vector<VerifySuite> suites;

  suites.push_back({"tier equivalence", [k]() -> std::string {
    for (std::int64_t n = 1; n <= k; ++n) {
      for (std::int64_t m = 1; m <= k; ++m) {
        if (diag_count_naive(n, m) > static_cast<std::int64_t>(kBruteDiagonalCap)) continue;
        if (is_hamiltonian_brute(n, m).hamiltonian != is_hamiltonian_fast(n, m)) {
          return "brute and link tiers differ at " + pair_text(n, m);
        }
      }
    }
    return {};
  }});

  suites.push_back({"crossing strings", [k]() -> std::string {
    for (std::int64_t n = 2; n <= k; ++n) {
      for (std::int64_t m = 2; m <= k; ++m) {
        if (std::gcd(n, m) != 1) continue;
        const auto t = string_powers(n, m);
        if (!(t == conjugate_by_d(string_intervals(n, m)))) {
          return "t != d s d^-1 at " + pair_text(n, m);
        }
        if (!(t == string_ceil(n, m))) return "ceiling form differs at " + pair_text(n, m);
      }
    }
    return {};
  }});

  suites.push_back({"diagonal counts", [k]() -> std::string {
    for (std::int64_t n = 1; n <= k; ++n) {
      for (std::int64_t m = 1; m <= k; ++m) {
        const auto naive = diag_count_naive(n, m);
        if (naive != diag_count_string(n, m) || naive != diag_count_reduction(n, m) ||
            naive != diag_count_tree(n, m)) {
          return "counters disagree at " + pair_text(n, m);
        }
      }
    }
    return {};
  }});

  auto each_orientation = [](std::int64_t k, auto check) -> std::string {
    for (std::int64_t n = 1; n <= k; ++n) {
      for (std::int64_t m = 1; m <= k; ++m) {
        if (std::gcd(n, m) != 1) continue;
        const auto dec = decompose(GridParams(n, m));
        const auto c = dec.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
          OrientationString omega(c, Dir::Up);
          for (std::size_t i = 0; i < c; ++i) {
            if ((mask >> i) & 1U) omega[i] = Dir::Right;
          }
          if (!check(dec, omega)) return pair_text(n, m) + " with " + omega.str();
        }
      }
    }
    return {};
  };

  suites.push_back({"link/trace equivalence", [k, each_orientation]() -> std::string {
    auto bad = each_orientation(k, [](const DiagonalDecomposition& dec,
                                      const OrientationString& omega) {
      return count_components(dec, omega) == loop_count(orientation_link(dec, omega));
    });
    return bad.empty() ? bad : "cycle and loop counts differ at " + bad;
  }});

  suites.push_back({"period identity", [k, each_orientation]() -> std::string {
    auto bad = each_orientation(k, [](const DiagonalDecomposition& dec,
                                      const OrientationString& omega) {
      const auto n = dec.grid().n();
      const auto nm = n * dec.grid().m();
      std::int64_t up_cells = 0;
      for (std::size_t i = 0; i < omega.size(); ++i) {
        if (omega[i] == Dir::Up) up_cells += static_cast<std::int64_t>(dec.diagonals()[i].cells.size());
      }
      if (up_cells % nm != 0) return false;
      const auto k_up = up_cells / nm;
      return orientation_link(dec, omega).period() == (4 - k_up) * n;
    });
    return bad.empty() ? bad : "-a+b+2c+2d != (4-k)n at " + bad;
  }});

  suites.push_back({"periodicity", [k]() -> std::string {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t m = 1; m <= k; ++m) {
        if (std::gcd(n, m) == 1 && !periodicity_check(n, m)) {
          return "Ham(n,m) != Ham(n,m+12n) at " + pair_text(n, m);
        }
      }
    }
    return {};
  }});

  suites.push_back({"tree rules", [k]() -> std::string {
    using enum TreeMove;
    const TreeMove moves[] = {Gamma, Delta, Lambda};
    for (std::int64_t big = 2; big <= k; ++big) {
      for (std::int64_t small = 1; small < big; ++small) {
        if (std::gcd(big, small) != 1 || (big + small) % 2 == 0) continue;
        const TreePair p{big, small};
        const auto base = tree_pair_diag(p);
        const auto g = tree_pair_diag(apply(Gamma, p));
        bool ok = tree_pair_diag(apply(Delta, p)) == g &&
                  tree_pair_diag(apply(Gamma, apply(Delta, p))) ==
                      tree_pair_diag(apply(Lambda, p)) &&
                  tree_pair_diag(apply(Gamma, apply(Lambda, p))) == g;
        for (auto kappa : moves) {
          ok = ok && tree_pair_diag(apply(Lambda, apply(kappa, p))) == base &&
               tree_pair_diag(apply(Gamma, apply(Gamma, apply(kappa, p)))) == base;
        }
        if (!ok) return "a tree rule fails at " + pair_text(big, small);
        const auto canon = apply(as_tree_string(canonicalize(tree_string(big, small))));
        if (tree_pair_diag(canon) != base) {
          return "canonical form changes the count at " + pair_text(big, small);
        }
      }
    }
    return {};
  }});

  return suites;
}

}  // namespace hamtorus

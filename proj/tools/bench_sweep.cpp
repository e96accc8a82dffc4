#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sectionring/sweep.hpp"

using namespace sectionring;

// Times the one-point closed-form-vs-monoid sweep, serial and parallel, and
// checks the two runs agree entry by entry.
int main(int argc, char** argv) {
  std::int64_t q_max = argc > 1 ? std::atoll(argv[1]) : 10;
  std::int64_t alpha_max = argc > 2 ? std::atoll(argv[2]) : 6;
  auto alphas = sweep_alphas(q_max, alpha_max);
  std::printf("sweep: %zu slopes (q <= %lld, alpha <= %lld)\n", alphas.size(),
              static_cast<long long>(q_max), static_cast<long long>(alpha_max));

  auto run = [&](bool parallel) {
    auto start = std::chrono::steady_clock::now();
    auto entries = one_point_sweep(alphas, parallel);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::size_t mismatches = 0;
    for (const auto& e : entries)
      if (!e.ok()) ++mismatches;
    std::printf("%-8s  %7.3f s  %zu mismatches\n", parallel ? "parallel" : "serial",
                dt.count(), mismatches);
    return entries;
  };

  auto serial = run(false);
  auto parallel = run(true);

  for (std::size_t k = 0; k < serial.size(); ++k) {
    bool same = serial[k].alpha == parallel[k].alpha &&
                serial[k].gens_match == parallel[k].gens_match &&
                serial[k].leaders_match == parallel[k].leaders_match &&
                serial[k].gen_count == parallel[k].gen_count &&
                serial[k].leader_count == parallel[k].leader_count;
    if (!same) {
      std::printf("DIVERGED at alpha = %s\n", serial[k].alpha.str().c_str());
      return 1;
    }
  }
  std::printf("serial and parallel runs agree\n");
  return 0;
}

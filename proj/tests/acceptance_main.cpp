// prints one line per acceptance criterion; exit status 1 when any fails
#include <cstdio>
#include <cstdlib>

#include "cl/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
  int failed = 0;
  for (int id = 1; id <= 12; ++id) {
    auto r = cl::run_criterion(id, seed);
    std::printf("criterion %2d %-32s %s  (%.1f ms)  %s\n", r.id, r.name.c_str(), r.pass ? "PASS" : "FAIL", r.ms,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/12 criteria passed\n", 12 - failed);
  return failed ? 1 : 0;
}

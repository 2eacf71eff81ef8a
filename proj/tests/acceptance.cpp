// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include <cstdio>
#include <thread>

#include "springer/springer.hpp"

int main() {
  springer::VerifyOptions opt;
  opt.ns = {3, 5, 7};
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto results = springer::verify_suite(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %d: %s  %s  (%.2fs)  %s\n", r.id, r.ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    failed += !r.ok;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 && results.size() == 9 ? 0 : 1;
}

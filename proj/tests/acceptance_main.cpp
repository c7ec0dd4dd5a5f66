// Runs every acceptance criterion; one line each, nonzero exit if any fails.
#include <cstdio>
#include <string>

#include "dedesym/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "all";
  bool ok = true;
  dedesym::run_suite(suite, [&](const dedesym::CriterionResult& r) {
    std::printf("%s\n", dedesym::format_result(r).c_str());
    std::fflush(stdout);
    ok &= r.passed;
  });
  return ok ? 0 : 1;
}

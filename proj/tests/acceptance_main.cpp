// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "greynoise/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
      return 2;
    }
  }
  const greynoise::verify::Report report =
      greynoise::verify::run_with_determinism(seed);
  const std::string text = greynoise::verify::format_report(report, seed);
  std::fputs(text.c_str(), stdout);
  return report.all_pass() ? 0 : 1;
}

// Runs the randomized model invariants. With no arguments every property
// runs; otherwise only the named ones. Exit code 1 if any fails.

#include "properties.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  bool all_ok = true;
  int ran = 0;
  for (const auto& p : checks::properties()) {
    bool wanted = argc < 2;
    for (int i = 1; i < argc; ++i) wanted = wanted || std::strcmp(argv[i], p.name) == 0;
    if (!wanted) continue;
    ++ran;
    checks::Checklist c;
    p.run(c);
    std::printf("%-4s property %-18s (%d checks)\n", c.ok() ? "PASS" : "FAIL", p.name, c.count());
    for (const auto& f : c.failures()) std::fprintf(stderr, "    %s\n", f.c_str());
    all_ok = all_ok && c.ok();
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown property\n");
    return 2;
  }
  return all_ok ? 0 : 1;
}

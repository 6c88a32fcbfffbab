#include <iostream>

#include "pathlat/selftest.hpp"

// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Optional argv[1] overrides the fixture directory.
int main(int argc, char** argv) {
  pathlat::AcceptanceOptions opts;
  if (argc > 1) opts.fixture_dir = argv[1];
  const int failures = pathlat::run_acceptance(std::cout, opts);
  return failures == 0 ? 0 : 1;
}

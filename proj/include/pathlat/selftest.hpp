#pragma once

#include <iosfwd>
#include <string>

namespace pathlat {

struct AcceptanceOptions {
  // Directory holding the bundled OEIS fixture files (A000213.txt is read).
  std::string fixture_dir = "data/oeis";
  // Seed for the randomized interval sweep; fixed so runs are reproducible.
  unsigned random_seed = 20240915;
};

// Runs the full acceptance suite: every criterion prints one [PASS]/[FAIL]
// line with timing. Returns the number of failed criteria.
int run_acceptance(std::ostream& out, const AcceptanceOptions& opts);

}  // namespace pathlat

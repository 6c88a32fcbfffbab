#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pathlat/bigint.hpp"

namespace pathlat {

// Reads a bundled sequence fixture: one decimal term per line, blank lines
// ignored, '#' starts a comment. Throws ParseError on malformed terms and
// DomainError when the file cannot be opened.
std::vector<BigInt> read_sequence_fixture(const std::filesystem::path& file);

// Locally computed reference sequences for the bundled fixtures:
//   A000108  Catalan numbers (Dyck path counts)
//   A000213  filling counts, shifted by one: term i+1 = count_fillings(i)
//   A001405  central binomials binom(n, floor(n/2)) (Dyck prefix counts)
// Returns `count` terms starting at index 0; throws DomainError for an
// unknown id.
std::vector<BigInt> local_sequence(const std::string& id, int count);

}  // namespace pathlat

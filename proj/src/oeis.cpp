#include "pathlat/oeis.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "pathlat/counting.hpp"
#include "pathlat/errors.hpp"
#include "pathlat/filling.hpp"

namespace pathlat {

std::vector<BigInt> read_sequence_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open sequence fixture " + file.string());
  std::vector<BigInt> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(begin, end - begin + 1);
    try {
      terms.emplace_back(tok);
    } catch (const std::exception&) {
      throw ParseError("bad term '" + tok + "' at " + file.string() + ":" +
                       std::to_string(lineno));
    }
  }
  return terms;
}

std::vector<BigInt> local_sequence(const std::string& id, int count) {
  if (count < 0) throw DomainError("local_sequence: negative count");
  std::vector<BigInt> terms;
  terms.reserve(static_cast<std::size_t>(count));
  if (id == "A000108") {
    for (int i = 0; i < count; ++i) terms.push_back(binom(2 * i, i) / (i + 1));
  } else if (id == "A000213") {
    // Offset by one against count_fillings: term i+1 equals count_fillings(i).
    for (int i = 0; i < count; ++i)
      terms.push_back(i == 0 ? BigInt(1) : count_fillings(i - 1));
  } else if (id == "A001405") {
    for (int i = 0; i < count; ++i) terms.push_back(binom(i, i / 2));
  } else {
    throw DomainError("local_sequence: no generator for " + id);
  }
  return terms;
}

}  // namespace pathlat

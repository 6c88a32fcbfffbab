#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pathlat {

// Every cardinality in this library is exact. Counts are nonnegative by
// construction; Moebius values use the same type with a sign.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace pathlat

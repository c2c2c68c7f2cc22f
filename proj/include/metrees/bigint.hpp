#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace metrees {

// Counting sequences outgrow 64 bits quickly (around N = 27 for tree
// counts), so every count and multiplicity is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace metrees

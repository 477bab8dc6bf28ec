#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ferrers {

// All counts and weights are exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

} // namespace ferrers

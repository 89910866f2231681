#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperforge {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

} // namespace hyperforge

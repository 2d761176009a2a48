#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vlab {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace vlab

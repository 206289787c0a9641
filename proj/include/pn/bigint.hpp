#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pn {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace pn

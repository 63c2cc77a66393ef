#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stanley {

using Bigint = boost::multiprecision::cpp_int;

}

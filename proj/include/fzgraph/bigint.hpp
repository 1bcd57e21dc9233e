#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fzg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact count or signed sum; no value in the library is ever rounded.
using BigCount = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace fzg

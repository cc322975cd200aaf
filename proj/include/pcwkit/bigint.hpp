#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace pcwkit {

// Exact arithmetic types used throughout the library. Hadamard's bound on
// 0/1 determinants exceeds 64 bits already for moderate sizes, so all
// determinant/permanent work is done with arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

inline bool is_odd(const BigInt& x) { return x % 2 != 0; }

}  // namespace pcwkit

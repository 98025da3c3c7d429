#ifndef WRGEN_BIG_INT_HPP
#define WRGEN_BIG_INT_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrgen {

using big_int = boost::multiprecision::cpp_int;

inline big_int factorial(std::uint64_t n) {
  big_int out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

inline big_int big_pow(const big_int& base, std::uint64_t exponent) {
  big_int out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace wrgen

#endif

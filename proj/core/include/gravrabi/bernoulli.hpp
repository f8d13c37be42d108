#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gravrabi {

using Rational = boost::multiprecision::cpp_rational;

/// B_0 .. B_n as exact rationals, with the convention B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);

}  // namespace gravrabi

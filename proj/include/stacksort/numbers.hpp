#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stacksort {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binom(n, k) with the combinatorial convention: zero when k < 0, k > n or n < 0.
BigInt binomial(long n, long k);

// C_n = binom(2n, n) / (n + 1). Cached; safe to call from several threads.
BigInt catalan(int n);

std::string to_string(const BigInt& v);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& v);

}  // namespace stacksort

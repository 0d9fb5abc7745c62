#include "stacksort/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace stacksort {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw std::domain_error("catalan: negative index");
  static std::mutex mu;
  static std::vector<BigInt> table{1};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const long m = static_cast<long>(table.size()) - 1;
    // C_{m+1} = C_m * 2(2m+1) / (m+2)
    table.push_back(table.back() * (2 * (2 * m + 1)) / (m + 2));
  }
  return table[n];
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace stacksort

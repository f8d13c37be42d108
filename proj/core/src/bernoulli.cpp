#include <gravrabi/bernoulli.hpp>

#include <stdexcept>

namespace gravrabi {

std::vector<Rational> bernoulli_numbers(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_numbers: n must be >= 0");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    boost::multiprecision::cpp_int binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
  }
  return b;
}

}  // namespace gravrabi

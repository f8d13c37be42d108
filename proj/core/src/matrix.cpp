#include <gravrabi/types.hpp>

#include <algorithm>
#include <cmath>

namespace gravrabi {

Matrix2C Matrix2C::adjoint() const {
  return {std::conj(w11), std::conj(w21), std::conj(w12), std::conj(w22)};
}

Matrix2C& Matrix2C::operator+=(const Matrix2C& o) {
  w11 += o.w11;
  w12 += o.w12;
  w21 += o.w21;
  w22 += o.w22;
  return *this;
}

Matrix2C& Matrix2C::operator-=(const Matrix2C& o) {
  w11 -= o.w11;
  w12 -= o.w12;
  w21 -= o.w21;
  w22 -= o.w22;
  return *this;
}

Matrix2C& Matrix2C::operator*=(Complex c) {
  w11 *= c;
  w12 *= c;
  w21 *= c;
  w22 *= c;
  return *this;
}

Matrix2C operator+(Matrix2C a, const Matrix2C& b) { return a += b; }
Matrix2C operator-(Matrix2C a, const Matrix2C& b) { return a -= b; }
Matrix2C operator*(Complex c, Matrix2C a) { return a *= c; }

Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
  return {a.w11 * b.w11 + a.w12 * b.w21, a.w11 * b.w12 + a.w12 * b.w22,
          a.w21 * b.w11 + a.w22 * b.w21, a.w21 * b.w12 + a.w22 * b.w22};
}

double max_abs_diff(const Matrix2C& a, const Matrix2C& b) {
  return std::max({std::abs(a.w11 - b.w11), std::abs(a.w12 - b.w12), std::abs(a.w21 - b.w21),
                   std::abs(a.w22 - b.w22)});
}

double unitarity_error(const Matrix2C& w) {
  return max_abs_diff(w.adjoint() * w, Matrix2C::identity());
}

double det_error(const Matrix2C& w) { return std::abs(w.det() - 1.0); }

bool all_finite(const Matrix2C& w) {
  for (Complex c : {w.w11, w.w12, w.w21, w.w22})
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

}  // namespace gravrabi

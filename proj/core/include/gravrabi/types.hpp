#pragma once

#include <complex>
#include <utility>

namespace gravrabi {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major entries.
struct Matrix2C {
  Complex w11{1.0, 0.0};
  Complex w12{0.0, 0.0};
  Complex w21{0.0, 0.0};
  Complex w22{1.0, 0.0};

  static Matrix2C identity() { return {}; }
  static Matrix2C zero() { return {0.0, 0.0, 0.0, 0.0}; }
  static Matrix2C diagonal(Complex a, Complex b) { return {a, 0.0, 0.0, b}; }

  Complex det() const { return w11 * w22 - w12 * w21; }
  Complex trace() const { return w11 + w22; }
  Matrix2C adjoint() const;

  Matrix2C& operator+=(const Matrix2C& o);
  Matrix2C& operator-=(const Matrix2C& o);
  Matrix2C& operator*=(Complex c);
};

Matrix2C operator+(Matrix2C a, const Matrix2C& b);
Matrix2C operator-(Matrix2C a, const Matrix2C& b);
Matrix2C operator*(const Matrix2C& a, const Matrix2C& b);
Matrix2C operator*(Complex c, Matrix2C a);

/// Largest |a_ij - b_ij|.
double max_abs_diff(const Matrix2C& a, const Matrix2C& b);

/// max |(W^dagger W - I)_ij|
double unitarity_error(const Matrix2C& w);

/// |det W - 1|
double det_error(const Matrix2C& w);

bool all_finite(const Matrix2C& w);

using ComplexPair = std::pair<Complex, Complex>;

}  // namespace gravrabi

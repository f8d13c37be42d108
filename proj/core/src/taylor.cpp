#include <gravrabi/oracle.hpp>

#include <gravrabi/bernoulli.hpp>
#include <gravrabi/errors.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace gravrabi::oracle {

namespace {

// Polynomial in (y, theta): (m, j) -> coefficient of y^m theta^j.
using Poly = std::map<std::pair<int, int>, Rational>;

Poly derivative(const Poly& p) {
  Poly out;
  for (const auto& [k, c] : p)
    if (k.first > 0) out[{k.first - 1, k.second}] += c * k.first;
  return out;
}

// (y^2/4 + theta + shift) * p
Poly multiply_weber(const Poly& p, const Rational& shift) {
  Poly out;
  for (const auto& [k, c] : p) {
    out[{k.first + 2, k.second}] += c / 4;
    out[{k.first, k.second + 1}] += c;
    if (shift != 0) out[{k.first, k.second}] += c * shift;
  }
  return out;
}

void add_into(Poly& a, const Poly& b) {
  for (const auto& [k, c] : b) a[k] += c;
}

struct Term {
  int m, j;  // powers of y and theta
  double c;
};

// X_n, Y_n of U^(n) = X_n U + Y_n U', for U solving U'' = (y^2/4 + theta + shift) U.
struct Table {
  std::array<std::vector<Term>, kMaxTaylorOrder + 1> x, y;
};

Table build_table(const Rational& shift) {
  Table t;
  Poly x, y;
  x[{0, 0}] = 1;
  auto store = [](const Poly& p) {
    std::vector<Term> v;
    for (const auto& [k, c] : p)
      if (c != 0) v.push_back({k.first, k.second, c.convert_to<double>()});
    return v;
  };
  for (int n = 0; n <= kMaxTaylorOrder; ++n) {
    t.x[n] = store(x);
    t.y[n] = store(y);
    Poly xn = derivative(x);
    add_into(xn, multiply_weber(y, shift));
    Poly yn = derivative(y);
    add_into(yn, x);
    x = std::move(xn);
    y = std::move(yn);
  }
  return t;
}

const Table& table(int sign) {
  static const Table minus = build_table(Rational(-1, 2));
  static const Table plus = build_table(Rational(1, 2));
  return sign < 0 ? minus : plus;
}

struct Powers {
  std::vector<Complex> v;
  Powers(Complex base, int n) : v(static_cast<std::size_t>(n) + 1) {
    v[0] = 1.0;
    for (int i = 1; i <= n; ++i) v[i] = v[i - 1] * base;
  }
  Complex operator[](int i) const { return v[i]; }
};

Complex eval_poly(const std::vector<Term>& terms, Complex y, Complex theta) {
  Complex acc = 0.0;
  for (const Term& t : terms) acc += t.c * std::pow(y, t.m) * std::pow(theta, t.j);
  return acc;
}

}  // namespace

TaylorResult taylor_expand(double xi0, double omega_tilde, double s, int zeta, int order,
                           int max_eps2_power) {
  if (order < 0 || order > kMaxTaylorOrder)
    throw DomainError("taylor_w: order must be in [0, 40]");
  if (!std::isfinite(xi0) || !std::isfinite(omega_tilde) || !std::isfinite(s))
    throw DomainError("taylor_w: non-finite argument");
  const OdeGenerators g = ode_generators(xi0, omega_tilde, s, zeta);
  const Complex p = g.p_gen, r = g.r_gen;
  const Complex eps2 = 2.0 * g.qp_comm;  // eps^2 = i zeta s^2
  const int kmax = max_eps2_power < 0 ? order : max_eps2_power;

  // y0 = -2P/eps and theta = R^2/eps^2, so y0^m theta^j eps^n becomes
  // (-2P)^m R^(2j) (eps^2)^((n-m-2j)/2); the exponent is a nonnegative integer.
  const Powers pw_p(-2.0 * p, order + 1);
  const Powers pw_r2(r * r, order + 1);
  const Powers pw_e2(eps2, order + 1);

  auto block = [&](const std::vector<Term>& terms, int n, int shift) {
    Complex acc = 0.0;
    for (const Term& t : terms) {
      const int e = n - shift - t.m - 2 * t.j;
      if (e < 0 || e % 2 != 0) continue;
      if (e / 2 > kmax) continue;
      acc += t.c * pw_p[t.m] * pw_r2[t.j] * pw_e2[e / 2];
    }
    return acc;
  };

  TaylorResult res;
  Matrix2C w = Matrix2C::zero();
  std::vector<double> mags;
  double fact = 1.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= n;
    const Table& tm = table(-1);
    const Table& tp = table(+1);
    // slope of the chain at y0: U'/U-type term -y0/2 = P/eps for the lower
    // order, +y0/2 = -P/eps for the upper order
    const Complex w11 = (block(tm.x[n], n, 0) + p * block(tm.y[n], n, 1)) / fact;
    const Complex w22 = (block(tp.x[n], n, 0) - p * block(tp.y[n], n, 1)) / fact;
    const Complex w12 = r * block(tm.y[n], n, 1) / fact;
    const Complex w21 = r * block(tp.y[n], n, 1) / fact;
    w.w11 += w11;
    w.w12 += w12;
    w.w21 += w21;
    w.w22 += w22;
    mags.push_back(std::max({std::abs(w11), std::abs(w12), std::abs(w21), std::abs(w22)}));
  }
  res.w = w;

  if (order >= 4) {
    const double last = std::max(mags[order], mags[order - 1]);
    const double before = std::max(mags[order - 2], mags[order - 3]);
    const double scale = std::max({std::abs(w.w11), std::abs(w.w12), std::abs(w.w21),
                                   std::abs(w.w22)});
    if (last > 1e-14 * scale && last >= before)
      res.warnings.push_back("taylor_w: terms stopped decreasing before truncation");
  }

  // Informational chain values at y0.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto fill = [&](TaylorState& st, int sign) {
    st.order = order;
    st.eps = std::sqrt(eps2);
    if (zeta != 0) {
      const Complex root = std::polar(1.0, zeta * M_PI / 4.0);
      st.y0 = Complex(0.0, -xi0) / root;
      const Complex theta(0.0, zeta * omega_tilde * omega_tilde / 4.0);
      for (int n = 0; n <= order; ++n) {
        st.x_coeffs.push_back(eval_poly(table(sign).x[n], st.y0, theta));
        st.y_coeffs.push_back(eval_poly(table(sign).y[n], st.y0, theta));
      }
    } else {
      st.y0 = Complex(nan, nan);
      st.x_coeffs.assign(order + 1, Complex(nan, nan));
      st.y_coeffs.assign(order + 1, Complex(nan, nan));
    }
  };
  fill(res.minus, -1);
  fill(res.plus, +1);
  return res;
}

Matrix2C taylor_w(double xi0, double omega_tilde, double s, int zeta, int order) {
  return taylor_expand(xi0, omega_tilde, s, zeta, order).w;
}

}  // namespace gravrabi::oracle

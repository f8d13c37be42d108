#include <doctest.h>

#include <gravrabi/approx.hpp>
#include <gravrabi/errors.hpp>
#include <gravrabi/exact.hpp>
#include <gravrabi/oracle.hpp>

#include "check.hpp"

using namespace gravrabi;

namespace {

const double kXi[] = {-5, -2, -0.5, 0, 0.5, 2, 5};
const double kOm[] = {0, 0.5, 1, 2, 4};
const double kS[] = {0, 0.5, 1, 2, 4, 8};

oracle::IntegratorConfig tight() {
  oracle::IntegratorConfig c;
  c.rel_tol = 1e-12;
  c.abs_tol = 1e-14;
  return c;
}

PhysicalParams rb_like() {
  PhysicalParams p;
  p.energy_excited = 2.5461e-19;
  p.mass = 1.443e-25;
  p.rabi = 1.0 / 1.125e-4;
  p.laser_freq = 2.5461e-19 / kHbar;
  p.wave_number = 8.05e6;
  p.accel = 9.81;
  return p;
}

}  // namespace

TEST_CASE("w_matrix: identity at s = 0") {
  for (int zeta : {-1, 1})
    for (double om : kOm)
      for (double xi : kXi) CHECK(max_abs_diff(exact::w_matrix(xi, om, 0, zeta), Matrix2C::identity()) < 1e-15);
}

TEST_CASE("w_matrix: no laser means no transitions") {
  for (int zeta : {-1, 1})
    for (double xi : {-3.0, 0.0, 1.5})
      for (double s : {0.5, 3.0, 9.0}) {
        const Matrix2C w = exact::w_matrix(xi, 0, s, zeta);
        CHECK(w.w12 == Complex(0.0));
        CHECK(w.w21 == Complex(0.0));
        // exp of the integrated diagonal generator P - lambda [Q,P]
        const Complex d = std::exp(Complex(0, s * xi / 2 - zeta * s * s / 4));
        CHECK(std::abs(w.w11 - d) < 1e-13);
        CHECK(std::abs(w.w22 - 1.0 / d) < 1e-13);
      }
}

TEST_CASE("w_matrix: high-precision integration of the flow") {
  struct R {
    double xi, om, s;
    int zeta;
    Matrix2C w;
  };
  const R refs[] = {
      {0.7, 1.3, 2.5, 1,
       {{-0.13680489365199446825, -0.38816913240702038722},
        {0.564713093800433507, 0.71533786940828901293},
        {-0.564713093800433507, 0.71533786940828901293},
        {-0.13680489365199446825, 0.38816913240702038722}}},
      {-2, 0.5, 8, -1,
       {{-0.18435192515528335181, 0.7608389738307751021},
        {0.033231106769829784472, -0.62131643880918368773},
        {-0.033231106769829784472, -0.62131643880918368773},
        {-0.18435192515528335181, -0.7608389738307751021}}},
      {5, 4, 8, 1,
       {{0.71036269528752562592, -0.022524593228955790403},
        {-0.69443412845330953192, -0.11242208449857391621},
        {0.69443412845330953192, -0.11242208449857391621},
        {0.71036269528752562592, 0.022524593228955790403}}},
      {0, 1, 6, 1,
       {{-0.86783408540153811731, 0.1204604999380944244},
        {0.29481513474038029718, -0.38136243194361923039},
        {-0.29481513474038029718, -0.38136243194361923039},
        {-0.86783408540153811731, -0.1204604999380944244}}},
  };
  for (const auto& r : refs) {
    CAPTURE(r.xi);
    CAPTURE(r.s);
    const exact::WEvaluation ev = exact::w_matrix_checked(r.xi, r.om, r.s, r.zeta);
    CHECK(max_abs_diff(ev.w, r.w) < 1e-12);
    CHECK(ev.abs_error_estimate < 1e-12);
  }
}

TEST_CASE("w_matrix: agrees with the ODE oracle") {
  CHECK(max_abs_diff(exact::w_matrix(0.7, 1.3, 2.5, 1), oracle::ode_w(0.7, 1.3, 2.5, 1, tight())) <
        1e-8);
  double worst = 0;
  for (int zeta : {-1, 1})
    for (double om : {0.5, 2.0})
      for (double xi : {-2.0, 0.5})
        for (double s : {1.0, 4.0})
          worst = std::max(worst, max_abs_diff(exact::w_matrix(xi, om, s, zeta),
                                               oracle::ode_w(xi, om, s, zeta, tight())));
  CHECK(worst < 1e-8);
}

TEST_CASE("w_matrix: unitary with unit determinant") {
  double u = 0, d = 0;
  for (int zeta : {-1, 1})
    for (double om : kOm) {
      const exact::WEvaluator ev(om, zeta);
      for (double xi : kXi)
        for (double s : kS) {
          const Matrix2C w = ev(xi, s).w;
          u = std::max(u, unitarity_error(w));
          d = std::max(d, det_error(w));
          // W = [[a, b], [-conj b, conj a]]
          CHECK(std::abs(w.w22 - std::conj(w.w11)) < 1e-12);
          CHECK(std::abs(w.w21 + std::conj(w.w12)) < 1e-12);
        }
    }
  CHECK(u < 1e-9);
  CHECK(d < 1e-10);
}

TEST_CASE("w_matrix: short times reduce to the Rabi matrix") {
  for (int zeta : {-1, 1})
    for (double s : {0.001, 0.005, 0.01})
      for (double xi : {-2.0, 0.3})
        CHECK(max_abs_diff(exact::w_matrix(xi, 1.2, s, zeta), approx::rabi_w(xi, 1.2, s)) < 1e-4);
}

TEST_CASE("w_matrix: late times") {
  const exact::WEvaluator ev(1.0, 1);
  for (double s : {20.0, 50.0, 80.0}) {
    const exact::WEvaluation e = ev(0.0, s);
    CAPTURE(s);
    CHECK(e.abs_error_estimate < 1e-10);
    CHECK(unitarity_error(e.w) < 1e-10);
    CHECK(std::norm(e.w.w12) == doctest::Approx((1 - std::exp(-M_PI / 4)) / 2).epsilon(0.02));
  }
}

TEST_CASE("w_matrix: preconditions") {
  CHECK_THROWS_AS(exact::w_matrix(0, 1, 1, 0), PreconditionError);
  CHECK_THROWS_AS(exact::w_matrix(0, 1, -1, 1), PreconditionError);
  CHECK_THROWS_AS(exact::w_matrix(0, -1, 1, 1), DomainError);
  CHECK_THROWS_AS(exact::w_matrix(std::nan(""), 1, 1, 1), DomainError);
  CHECK(max_abs_diff(exact::internal_evolution(0.4, 1.1, 2.0, 0), approx::rabi_w(0.4, 1.1, 2.0)) ==
        0.0);
}

TEST_CASE("WEvaluator matches the one-shot evaluation") {
  const exact::WEvaluator ev(1.3, -1);
  CHECK(ev.omega_tilde() == 1.3);
  CHECK(ev.zeta() == -1);
  for (double xi : {-1.0, 0.2, 3.0})
    CHECK(max_abs_diff(ev(xi, 2.2).w, exact::w_matrix(xi, 1.3, 2.2, -1)) == 0.0);
}

TEST_CASE("evolution_blocks: laser off is free fall") {
  test::Rng rng(99);
  for (int n = 0; n < 20; ++n) {
    PhysicalParams p = rb_like();
    p.rabi = 0;
    p.accel = rng.uniform(-20, 20);
    p.laser_freq *= 1 + rng.uniform(-1e-9, 1e-9);
    p.energy_ground = rng.uniform(0, 1e-21);
    p.gamma_excited = rng.uniform(0, 1e3);
    const double hk = kHbar * p.wave_number;
    const double mom = rng.uniform(-5, 5) * hk;
    const double t = rng.uniform(0, 5e-4);
    const Matrix2C u = exact::evolution_blocks(mom, t, p).assembled();
    CHECK(max_abs_diff(u, exact::free_fall_operator(mom, t, p)) < 1e-12);
  }
}

TEST_CASE("evolution_blocks: recoil shift of the two W arguments") {
  const PhysicalParams p = rb_like();
  const ReducedParams r = reduce_params(p);
  const double hk = kHbar * p.wave_number;
  for (double mom : {-2 * hk, 0.0, 0.3 * hk})
    for (double t : {1e-4, 4e-4}) {
      const exact::UBlocks b = exact::evolution_blocks(mom, t, p);
      const double xi = reduced_detuning_at(p, r, mom), s = t / r.tau_a;
      const Matrix2C m = exact::w_matrix(xi + r.recoil_tilde, r.omega_tilde, s, r.zeta);
      const Matrix2C pl = exact::w_matrix(xi - r.recoil_tilde, r.omega_tilde, s, r.zeta);
      CHECK(max_abs_diff(b.w_shift_minus, m) < 1e-12);
      CHECK(max_abs_diff(b.w_shift_plus, pl) < 1e-12);
      CHECK(b.kick.up == doctest::Approx(hk));
      CHECK(b.kick.down == doctest::Approx(-hk));
    }
}

TEST_CASE("evolution_blocks: decay of the excited amplitude") {
  PhysicalParams p = rb_like();
  p.rabi = 0;
  p.gamma_excited = 2e3;
  const double t = 3e-4;
  const Matrix2C u = exact::evolution_blocks(0, t, p).assembled();
  CHECK(std::abs(u.w11) == doctest::Approx(std::exp(-p.gamma_excited * t / 2)).epsilon(1e-12));
  CHECK(std::abs(u.w22) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(exact::evolution_blocks(0, -1, p), PreconditionError);
}

TEST_CASE("free_fall_operator") {
  const PhysicalParams p = rb_like();
  CHECK(max_abs_diff(exact::free_fall_operator(0, 0, p), Matrix2C::identity()) == 0.0);
  const Matrix2C a = exact::free_fall_operator(0, 1e-9, p), b = exact::free_fall_operator(0, 2e-9, p);
  CHECK(std::abs(a.w11 * a.w11 - b.w11) < 1e-12);
  CHECK(std::abs(a.w22 * a.w22 - b.w22) < 1e-12);
}

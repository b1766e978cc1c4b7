#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rts/objective.hpp"

using namespace rts;

TEST_CASE("rastrigin hand values") {
  CHECK(rastrigin({0.0, 0.0}) == 0.0);
  CHECK(rastrigin({1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rastrigin({0.5, 0.5}) == doctest::Approx(40.5).epsilon(1e-12));
  CHECK(rastrigin({0.0}) == 0.0);
}

TEST_CASE("built-in objective metadata") {
  const Objective r = make_objective("rastrigin", 2);
  CHECK(r.dim() == 2);
  CHECK(r.spec().sense == Sense::kMinimize);
  CHECK(r.spec().domain.lower[0] == -5.0);
  CHECK(r.spec().domain.upper[1] == 5.0);
  REQUIRE(r.spec().optimum.has_value());
  CHECK(r.eval_true(*r.spec().optimum) == 0.0);
  CHECK(*r.spec().optimum_value == 0.0);

  const Objective s = make_objective("sphere", 3);
  CHECK(s.eval_true({1.0, 1.0, 1.0}) == 0.0);
  CHECK(s.eval_true({0.0, 0.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));

  CHECK_THROWS_AS(make_objective("nope", 2), std::invalid_argument);
  CHECK_THROWS_AS(make_objective("vee", 2), std::invalid_argument);  // 1-d only
  CHECK_THROWS_AS(make_objective("rastrigin", 0), std::invalid_argument);
}

TEST_CASE("step_sphere jumps outside the ball") {
  const Objective o = make_objective("step_sphere", 2);
  CHECK(o.eval_true({0.3, 0.3}) == 0.0);
  CHECK(o.eval_true({0.3, 0.44}) == doctest::Approx(0.0196).epsilon(1e-12));   // inside
  CHECK(o.eval_true({0.3, 0.51}) == doctest::Approx(5.0441).epsilon(1e-12));   // outside
  CHECK(o.eval_true({0.3, 0.5}) == doctest::Approx(0.04).epsilon(1e-12));      // boundary
}

TEST_CASE("vee is a shifted absolute value") {
  const Objective v = make_objective("vee", 1);
  CHECK(v.eval_true({0.3}) == 0.0);
  CHECK(v.eval_true({0.0}) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(v.eval_true({1.0}) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("eval_true rejects points outside the domain") {
  const Objective r = make_objective("rastrigin", 2);
  CHECK_THROWS_AS(r.eval_true({5.1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(r.eval_true({0.0}), std::domain_error);
}

TEST_CASE("unit-cube mapping round-trips") {
  const Objective r = make_objective("rastrigin", 2);
  const Point corner = r.to_user({0.0, 1.0});
  CHECK(corner[0] == -5.0);
  CHECK(corner[1] == 5.0);
  const Point x_user{1.25, -3.75};
  const Point back = r.to_user(r.to_norm(x_user));
  CHECK(back[0] == doctest::Approx(x_user[0]).epsilon(1e-12));
  CHECK(back[1] == doctest::Approx(x_user[1]).epsilon(1e-12));
}

TEST_CASE("simulate negates when minimizing and noise none is exact") {
  const Objective r = make_objective("rastrigin", 2);
  RngStream rng(3);
  const Point x_norm{0.3, 0.8};
  CHECK(r.simulate(x_norm, NoiseSpec::none(), rng) == -r.eval_true(r.to_user(x_norm)));

  const Objective rmax = r.with_sense(Sense::kMaximize);
  CHECK(rmax.simulate(x_norm, NoiseSpec::none(), rng) == r.eval_true(r.to_user(x_norm)));
  CHECK_FALSE(rmax.spec().optimum.has_value());  // argmin is not the argmax

  const Objective same = r.with_sense(Sense::kMinimize);
  CHECK(same.spec().optimum.has_value());
}

TEST_CASE("noise variance proxies") {
  CHECK(NoiseSpec::none().variance_proxy() == 0.0);
  CHECK(NoiseSpec::gaussian(0.5).variance_proxy() == 0.25);
  CHECK(NoiseSpec::uniform(-2.0, 4.0).variance_proxy() == 9.0);
  CHECK_THROWS_AS(NoiseSpec::gaussian(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(NoiseSpec::uniform(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("noise draws match their distributions") {
  RngStream rng(17);
  const auto g = NoiseSpec::gaussian(0.5);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = g.draw(rng);
    sum += e;
    sumsq += e * e;
  }
  CHECK(std::fabs(sum / n) < 4.0 * 0.5 / std::sqrt(double(n)));
  CHECK(std::fabs(sumsq / n - 0.25) < 0.01);

  const auto u = NoiseSpec::uniform(-2.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double e = u.draw(rng);
    CHECK(e >= -2.0);
    CHECK(e < 4.0);
  }
  CHECK(NoiseSpec::none().draw(rng) == 0.0);
}

#include "rts/objective.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace rts {

NoiseSpec NoiseSpec::none() { return NoiseSpec{NoiseKind::kNone, 0.0, 0.0, 0.0}; }

NoiseSpec NoiseSpec::gaussian(double sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("gaussian noise: sigma must be >= 0");
  return NoiseSpec{NoiseKind::kGaussian, sigma, 0.0, 0.0};
}

NoiseSpec NoiseSpec::uniform(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("uniform noise: need a < b");
  return NoiseSpec{NoiseKind::kUniform, 0.0, a, b};
}

double NoiseSpec::variance_proxy() const {
  switch (kind) {
    case NoiseKind::kNone: return 0.0;
    case NoiseKind::kGaussian: return sigma * sigma;
    case NoiseKind::kUniform: {
      const double half = 0.5 * (b - a);
      return half * half;
    }
  }
  throw std::logic_error("noise: unknown kind");
}

double NoiseSpec::draw(RngStream& rng) const {
  switch (kind) {
    case NoiseKind::kNone: return 0.0;
    case NoiseKind::kGaussian: return sigma * rng.normal();
    case NoiseKind::kUniform: return rng.uniform(a, b);
  }
  throw std::logic_error("noise: unknown kind");
}

Objective::Objective(ObjectiveSpec spec, std::function<double(const Point&)> mu)
    : spec_(std::move(spec)), mu_(std::move(mu)) {
  if (spec_.dim != spec_.domain.dim())
    throw std::invalid_argument("objective: domain dimension mismatch");
  if (!mu_) throw std::invalid_argument("objective: missing response surface");
}

double Objective::eval_true(const Point& x_user) const {
  if (!spec_.domain.contains(x_user))
    throw std::domain_error("eval_true: point outside the objective domain");
  return mu_(x_user);
}

Point Objective::to_user(const Point& x_norm) const {
  if (static_cast<int>(x_norm.size()) != spec_.dim)
    throw std::invalid_argument("to_user: dimension mismatch");
  Point out(x_norm.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double lo = spec_.domain.lower[j], hi = spec_.domain.upper[j];
    double v = lo + x_norm[j] * (hi - lo);
    // The affine image of a unit-cube point can land an ulp outside.
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    out[j] = v;
  }
  return out;
}

Point Objective::to_norm(const Point& x_user) const {
  if (static_cast<int>(x_user.size()) != spec_.dim)
    throw std::invalid_argument("to_norm: dimension mismatch");
  Point out(x_user.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double lo = spec_.domain.lower[j], hi = spec_.domain.upper[j];
    double v = (x_user[j] - lo) / (hi - lo);
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    out[j] = v;
  }
  return out;
}

double Objective::simulate(const Point& x_norm, const NoiseSpec& noise,
                           RngStream& rng) const {
  const double y = eval_true(to_user(x_norm)) + noise.draw(rng);
  return spec_.sense == Sense::kMinimize ? -y : y;
}

Objective Objective::with_sense(Sense sense) const {
  Objective out = *this;
  if (sense != out.spec_.sense) {
    out.spec_.sense = sense;
    out.spec_.optimum.reset();
    out.spec_.optimum_value.reset();
  }
  return out;
}

double rastrigin(const Point& x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x)
    s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return s;
}

Objective make_objective(const std::string& name, int dim) {
  if (dim < 1) throw std::invalid_argument("objective: dim must be >= 1");

  if (name == "rastrigin") {
    ObjectiveSpec spec{name, dim,
                       Hyperrectangle(std::vector<double>(dim, -5.0),
                                      std::vector<double>(dim, 5.0)),
                       Sense::kMinimize, Point(dim, 0.0), 0.0};
    return Objective(std::move(spec), &rastrigin);
  }

  if (name == "sphere") {
    // Centered at the 1-vector so the optimum sits off the domain midpoint.
    ObjectiveSpec spec{name, dim,
                       Hyperrectangle(std::vector<double>(dim, -5.0),
                                      std::vector<double>(dim, 5.0)),
                       Sense::kMinimize, Point(dim, 1.0), 0.0};
    return Objective(std::move(spec), [](const Point& x) {
      double s = 0.0;
      for (double v : x) s += (v - 1.0) * (v - 1.0);
      return s;
    });
  }

  if (name == "step_sphere") {
    // Sphere around 0.3-vector plus a +5 jump outside the radius-0.2 ball;
    // the discontinuity stresses split placement.
    ObjectiveSpec spec{name, dim,
                       Hyperrectangle(std::vector<double>(dim, 0.0),
                                      std::vector<double>(dim, 1.0)),
                       Sense::kMinimize, Point(dim, 0.3), 0.0};
    return Objective(std::move(spec), [](const Point& x) {
      double s = 0.0;
      for (double v : x) s += (v - 0.3) * (v - 0.3);
      return s + (s > 0.2 * 0.2 ? 5.0 : 0.0);
    });
  }

  if (name == "vee") {
    if (dim != 1) throw std::invalid_argument("objective: vee is 1-d only");
    ObjectiveSpec spec{name, 1,
                       Hyperrectangle(std::vector<double>{0.0}, std::vector<double>{1.0}),
                       Sense::kMinimize, Point{0.3}, 0.0};
    return Objective(std::move(spec),
                     [](const Point& x) { return std::fabs(x[0] - 0.3); });
  }

  throw std::invalid_argument("objective: unknown name '" + name + "'");
}

}  // namespace rts

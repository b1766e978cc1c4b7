#pragma once

#include <functional>
#include <optional>
#include <string>

#include "rts/geometry.hpp"
#include "rts/rng.hpp"

namespace rts {

enum class Sense { kMinimize, kMaximize };

enum class NoiseKind { kNone, kGaussian, kUniform };

// Additive observation noise. variance_proxy() is the sub-Gaussian variance
// parameter: sigma^2 for gaussian, (b - a)^2 / 4 for bounded uniform, 0 for
// none.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::kNone;
  double sigma = 0.0;         // gaussian scale
  double a = 0.0, b = 0.0;    // uniform support

  static NoiseSpec none();
  static NoiseSpec gaussian(double sigma);
  static NoiseSpec uniform(double a, double b);

  double variance_proxy() const;
  double draw(RngStream& rng) const;
};

struct ObjectiveSpec {
  std::string name;
  int dim = 0;
  Hyperrectangle domain;
  Sense sense = Sense::kMinimize;
  std::optional<Point> optimum;         // user units
  std::optional<double> optimum_value;  // mu at the optimum
};

// Black-box response surface plus its metadata. The search works on the unit
// cube and always maximizes; this class owns the affine map to user units and
// the sense negation.
class Objective {
 public:
  Objective(ObjectiveSpec spec, std::function<double(const Point&)> mu);

  const ObjectiveSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim; }

  double eval_true(const Point& x_user) const;  // throws outside the domain
  Point to_user(const Point& x_norm) const;     // unit cube -> domain
  Point to_norm(const Point& x_user) const;     // domain -> unit cube

  // One noisy observation at a normalized point, negated when minimizing so
  // callers always maximize.
  double simulate(const Point& x_norm, const NoiseSpec& noise, RngStream& rng) const;

  // Same surface with a flipped goal; drops the recorded optimum when the
  // new sense no longer matches it.
  Objective with_sense(Sense sense) const;

 private:
  ObjectiveSpec spec_;
  std::function<double(const Point&)> mu_;
};

// Built-ins: rastrigin | sphere | step_sphere | vee (vee is 1-d only).
Objective make_objective(const std::string& name, int dim);

double rastrigin(const Point& x);

}  // namespace rts

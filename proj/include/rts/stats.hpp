#pragma once

#include <span>

namespace rts {

double mean_of(std::span<const double> v);

// Root mean squared deviation from a fixed target.
double rmse_against(std::span<const double> v, double target);

// Linear-interpolation quantile (h = q * (n - 1)) over a sorted copy.
double quantile(std::span<const double> v, double q);

}  // namespace rts

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tweetlab {

/// Locally weighted linear regression (Cleveland's LOWESS). Each fit uses the
/// ceil(fraction * n) nearest neighbours (at least 2) with tricube weights
/// scaled by the distance to the farthest of them; `iterations` robustness
/// passes reweight by the bisquare of residual / (6 * median |residual|).
///
/// Throws std::invalid_argument when sizes differ, n < 2, xs is not strictly
/// increasing or fraction is outside (0, 1].
std::vector<double> lowess(std::span<const double> xs, std::span<const double> ys, double fraction,
                           std::size_t iterations);

}  // namespace tweetlab

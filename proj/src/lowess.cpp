#include "tweetlab/lowess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tweetlab {

namespace {

double tricube(double u) {
  if (u >= 1.0) return 0.0;
  const double t = 1.0 - u * u * u;
  return t * t * t;
}

double bisquare(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  const double t = 1.0 - u * u;
  return t * t;
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<long>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    m = (m + *std::max_element(v.begin(), v.begin() + static_cast<long>(mid))) / 2.0;
  }
  return m;
}

}  // namespace

std::vector<double> lowess(std::span<const double> xs, std::span<const double> ys, double fraction,
                           std::size_t iterations) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("lowess: xs and ys differ in length");
  if (n < 2) throw std::invalid_argument("lowess: need at least two points");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("lowess: fraction must be in (0, 1]");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("lowess: xs must be strictly increasing");
  }

  const auto span_size = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))),
                                                 2, n);
  const double x_range = xs[n - 1] - xs[0];
  const double degenerate_spread = 1e-7 * x_range;

  std::vector<double> fitted(n);
  std::vector<double> robustness(n, 1.0);
  std::vector<double> weights(n);

  for (std::size_t pass = 0;; ++pass) {
    std::size_t lo = 0;  // window [lo, lo + span_size) of nearest neighbours
    for (std::size_t i = 0; i < n; ++i) {
      while (lo + span_size < n && xs[i] - xs[lo] > xs[lo + span_size] - xs[i]) ++lo;
      const std::size_t hi = lo + span_size;  // exclusive
      const double h = std::max(xs[i] - xs[lo], xs[hi - 1] - xs[i]);

      double sw = 0.0, sx = 0.0, sy = 0.0;
      for (std::size_t j = lo; j < hi; ++j) {
        weights[j] = tricube(std::abs(xs[j] - xs[i]) / h) * robustness[j];
        sw += weights[j];
        sx += weights[j] * xs[j];
        sy += weights[j] * ys[j];
      }
      if (sw <= 0.0) {
        fitted[i] = ys[i];
        continue;
      }
      const double mx = sx / sw;
      const double my = sy / sw;
      double sxx = 0.0, sxy = 0.0;
      for (std::size_t j = lo; j < hi; ++j) {
        const double dx = xs[j] - mx;
        sxx += weights[j] * dx * dx;
        sxy += weights[j] * dx * (ys[j] - my);
      }
      if (std::sqrt(sxx / sw) <= degenerate_spread) {
        fitted[i] = my;
      } else {
        fitted[i] = my + (sxy / sxx) * (xs[i] - mx);
      }
    }

    if (pass == iterations) break;
    std::vector<double> abs_residuals(n);
    for (std::size_t j = 0; j < n; ++j) abs_residuals[j] = std::abs(ys[j] - fitted[j]);
    const double scale = 6.0 * median(abs_residuals);
    if (scale == 0.0) break;
    for (std::size_t j = 0; j < n; ++j) robustness[j] = bisquare((ys[j] - fitted[j]) / scale);
  }
  return fitted;
}

}  // namespace tweetlab

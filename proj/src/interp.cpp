#include "hystlab/interp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hystlab/errors.hpp"

namespace hystlab {

namespace {

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw ValidationError("interpolation table needs at least two (x, y) nodes");
  for (size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw ValidationError("interpolation abscissae must be strictly increasing");

  std::vector<double> h(n - 1), del(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    del[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  m_.assign(n, 0.0);
  if (n == 2) {
    m_[0] = m_[1] = del[0];
    return;
  }
  for (size_t i = 1; i + 1 < n; ++i) {
    if (del[i - 1] * del[i] <= 0.0) {
      m_[i] = 0.0;  // local extremum: flat node keeps the shape
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m_[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
    }
  }
  // One-sided ends, pulled back into the monotone region when needed.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(m) != sign(d0))
      m = 0.0;
    else if (sign(d0) != sign(d1) && std::abs(m) > 3.0 * std::abs(d0))
      m = 3.0 * d0;
    return m;
  };
  m_[0] = end_slope(h[0], h[1], del[0], del[1]);
  m_[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
}

int MonotoneCubic::interval(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  int i = static_cast<int>(it - x_.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(x_.size()) - 2);
}

double MonotoneCubic::value(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const int i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h * h10 * m_[i] + h01 * y_[i + 1] + h * h11 * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  if (x < x_.front() || x > x_.back()) return 0.0;
  const int i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double d00 = (6 * t2 - 6 * t) / h;
  const double d10 = 3 * t2 - 4 * t + 1;
  const double d01 = (-6 * t2 + 6 * t) / h;
  const double d11 = 3 * t2 - 2 * t;
  return d00 * y_[i] + d10 * m_[i] + d01 * y_[i + 1] + d11 * m_[i + 1];
}

bool MonotoneCubic::strictly_increasing() const {
  for (size_t i = 1; i < y_.size(); ++i)
    if (!(y_[i] > y_[i - 1])) return false;
  return true;
}

bool MonotoneCubic::strictly_decreasing() const {
  for (size_t i = 1; i < y_.size(); ++i)
    if (!(y_[i] < y_[i - 1])) return false;
  return true;
}

double MonotoneCubic::inverse(double y) const {
  const bool inc = strictly_increasing();
  if (!inc && !strictly_decreasing())
    throw ValidationError("inverse needs a strictly monotone table");
  const double y_lo = inc ? y_.front() : y_.back();
  const double y_hi = inc ? y_.back() : y_.front();
  if (y <= y_lo) return inc ? x_.front() : x_.back();
  if (y >= y_hi) return inc ? x_.back() : x_.front();

  // Bracket the node interval, then bisect the cubic inside it.
  int lo = 0, hi = static_cast<int>(x_.size()) - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (inc ? (y_[mid] <= y) : (y_[mid] >= y))
      lo = mid;
    else
      hi = mid;
  }
  double a = x_[lo], b = x_[hi];
  for (int it = 0; it < 200 && b - a > 0; ++it) {
    const double c = 0.5 * (a + b);
    if (c <= a || c >= b) break;
    const bool below = inc ? (value(c) < y) : (value(c) > y);
    (below ? a : b) = c;
  }
  return 0.5 * (a + b);
}

}  // namespace hystlab

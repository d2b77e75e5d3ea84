#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace fcont {

/// Truncated Taylor expansion about a point: c[k] = f^(k)(x0) / k!.
/// Used to get exact high-order derivatives of the catalog functions.
class Taylor {
 public:
  Taylor(std::size_t order, double value) : c_(order + 1, 0.0) { c_[0] = value; }

  static Taylor variable(double x0, std::size_t order) {
    Taylor t(order, x0);
    if (order >= 1) t.c_[1] = 1.0;
    return t;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  double operator[](std::size_t k) const { return c_[k]; }

  double derivative(std::size_t k) const {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return c_[k] * f;
  }

  Taylor& operator+=(const Taylor& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Taylor& operator*=(double a) {
    for (double& v : c_) v *= a;
    return *this;
  }
  Taylor& operator+=(double a) {
    c_[0] += a;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator+(Taylor a, double b) { return a += b; }
  friend Taylor operator-(Taylor a, double b) { return a += -b; }
  friend Taylor operator*(double a, Taylor b) { return b *= a; }
  friend Taylor operator-(Taylor a) { return a *= -1.0; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor out(a.order(), 0.0);
    for (std::size_t k = 0; k < out.c_.size(); ++k)
      for (std::size_t j = 0; j <= k; ++j) out.c_[k] += a.c_[j] * b.c_[k - j];
    return out;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q(a.order(), 0.0);
    for (std::size_t k = 0; k < q.c_.size(); ++k) {
      double acc = a.c_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

  friend Taylor operator/(double a, const Taylor& b) { return Taylor(b.order(), a) / b; }

  friend Taylor exp(const Taylor& g) {
    Taylor h(g.order(), std::exp(g.c_[0]));
    for (std::size_t k = 1; k < h.c_.size(); ++k) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * g.c_[j] * h.c_[k - j];
      h.c_[k] = acc / static_cast<double>(k);
    }
    return h;
  }

  /// Returns {sin g, cos g}.
  friend std::pair<Taylor, Taylor> sincos(const Taylor& g) {
    Taylor s(g.order(), std::sin(g.c_[0]));
    Taylor c(g.order(), std::cos(g.c_[0]));
    for (std::size_t k = 1; k < s.c_.size(); ++k) {
      double ds = 0.0;
      double dc = 0.0;
      for (std::size_t j = 1; j <= k; ++j) {
        ds += static_cast<double>(j) * g.c_[j] * c.c_[k - j];
        dc -= static_cast<double>(j) * g.c_[j] * s.c_[k - j];
      }
      s.c_[k] = ds / static_cast<double>(k);
      c.c_[k] = dc / static_cast<double>(k);
    }
    return {s, c};
  }

 private:
  std::vector<double> c_;
};

inline Taylor sin(const Taylor& g) { return sincos(g).first; }
inline Taylor cos(const Taylor& g) { return sincos(g).second; }

}  // namespace fcont

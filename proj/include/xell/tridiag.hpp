#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "xell/errors.hpp"

namespace xell::tridiag {

/// Eigen-decomposition of a symmetric tridiagonal matrix, keeping only the
/// first component of each normalized eigenvector (all Golub-Welsch needs).
/// QL with implicit shifts; O(n^2) time, O(n) memory.
struct EigenFirstRow {
  std::vector<double> values;           // ascending
  std::vector<double> first_components;  // matching order
};

inline EigenFirstRow eigen_first_row(std::vector<double> d,
                                     std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  e.resize(n, 0.0);  // e[i] couples i and i+1; e[n-1] is a sentinel
  std::vector<double> z(n, 0.0);
  if (n > 0) z[0] = 1.0;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 64)
          throw NoConvergence("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  EigenFirstRow out;
  out.values.resize(n);
  out.first_components.resize(n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[idx[j]];
    out.first_components[j] = z[idx[j]];
  }
  return out;
}

/// Number of eigenvalues <= sigma (Sturm sequence via the shifted LDL^T sign
/// count). Zero pivots count as negative, which keeps the count monotone in
/// sigma -- required for bisection to converge when a midpoint lands exactly
/// on an eigenvalue.
inline int sturm_count(const std::vector<double>& d,
                       const std::vector<double>& e, double sigma) {
  int count = 0;
  double q = d[0] - sigma;
  if (q < 0.0) {
    ++count;
  } else if (q == 0.0) {
    ++count;
    q = -1e-300;
  }
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - sigma - e[i - 1] * e[i - 1] / q;
    if (q < 0.0) {
      ++count;
    } else if (q == 0.0) {
      ++count;
      q = -1e-300;
    }
  }
  return count;
}

/// k smallest eigenvalues (ascending) by bisection on the Sturm count.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                              const std::vector<double>& e,
                                              int k, double tol = 1e-10) {
  const int n = static_cast<int>(d.size());
  double lo = d[0], hi = d[0];
  for (int i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(e[i - 1]) : 0.0;
    const double right = i < n - 1 ? std::abs(e[i]) : 0.0;
    lo = std::min(lo, d[i] - left - right);
    hi = std::max(hi, d[i] + left + right);
  }
  std::vector<double> out;
  out.reserve(k);
  double floor_bound = lo;
  for (int j = 1; j <= k; ++j) {
    double a = floor_bound, b = hi;
    while (b - a > tol + 4.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(a), std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(d, e, mid) >= j)
        b = mid;
      else
        a = mid;
    }
    out.push_back(0.5 * (a + b));
    floor_bound = a;  // eigenvalues are sought in ascending order
  }
  return out;
}

}  // namespace xell::tridiag

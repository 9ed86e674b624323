#include "lrank/numerics.hpp"

#include <cmath>
#include <string>

#include "lrank/error.hpp"

namespace lrank {

namespace {

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::DomainError, what); }

constexpr double kRelTol = 1e-9;
constexpr int kMaxIter = 200;

}  // namespace

double tower(int i) {
  if (i < 0) domain("tower of negative index");
  double v = 1.0;
  for (int j = 0; j < i; ++j) {
    v = std::exp(v);
    if (!std::isfinite(v)) throw Error(ErrorCode::Overflow, "tower(" + std::to_string(i) + ")");
  }
  return v;
}

double iter_log(int i, double x) {
  if (i < 0) domain("negative iteration count");
  if (std::isnan(x)) domain("NaN argument");
  if (i == 0) return x;
  // x > tower(i-1) is the same as log^(i-1) x > 1.
  double y = x;
  for (int j = 0; j < i - 1; ++j) {
    if (!(y > 0.0)) domain("iter_log(" + std::to_string(i) + ", " + std::to_string(x) + ")");
    y = std::log(y);
  }
  if (!(y > 1.0)) domain("iter_log(" + std::to_string(i) + ", " + std::to_string(x) + ")");
  return std::log(y);
}

double log_power_tower(int i, double x) {
  if (i == 0) {
    if (!(x > 0.0)) domain("log_power_tower(0, x<=0)");
    return x * std::log(x);
  }
  double l = iter_log(i, x);
  if (!(l > 0.0)) domain("log_power_tower below tower(i)");
  return x * std::log(l);
}

double gamma_log(int i, double k, double log_n) {
  const double lo0 = tower(i);
  if (!(k >= lo0)) domain("gamma needs k >= tower(i)");
  if (std::isnan(log_n) || log_n < -1e-12) domain("gamma needs n >= 1");
  const double top = (k == lo0) ? 0.0 : log_power_tower(i, k);
  const double tol = 1e-12 * std::max(1.0, std::fabs(top));
  if (log_n > top + tol) domain("gamma needs n <= (log^(i) k)^k");
  if (log_n <= 0.0) return k;
  if (log_n >= top) return lo0;
  // x*log(log^(i) x) increases on [tower(i), k]; solve it equal to top - log_n.
  const double target = top - log_n;
  double lo = lo0, hi = k;
  for (int it = 0; it < kMaxIter && hi - lo > kRelTol * hi * 1e-3; ++it) {
    double mid = 0.5 * (lo + hi);
    double g = (mid == lo0) ? 0.0 : log_power_tower(i, mid);
    if (g < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double gamma(int i, double k, double n) {
  if (!(n >= 1.0 - 1e-15)) domain("gamma needs n >= 1");
  return gamma_log(i, k, std::log(std::max(n, 1.0)));
}

SolveK solve_k(int t, double n) {
  if (t < 2) domain("solve_k needs t >= 2");
  if (!(n >= 1.0)) domain("solve_k needs n >= 1");
  SolveK out;
  const int i = t - 2;
  const double log_n = std::log(n);
  const double lo0 = tower(i);
  auto g = [&](double k) { return k <= lo0 ? 0.0 : log_power_tower(i, k); };
  const double tol = 1e-12 * std::max(1.0, log_n);
  if (g(lo0) >= log_n - tol) {
    out.k = lo0;
  } else {
    double lo = lo0, hi = std::max(2.0 * lo0, lo0 + 1.0);
    while (g(hi) < log_n - tol) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw Error(ErrorCode::Overflow, "solve_k bracket");
    }
    for (int it = 0; it < kMaxIter && hi - lo > kRelTol * hi * 1e-3; ++it) {
      double mid = 0.5 * (lo + hi);
      if (g(mid) >= log_n - tol)
        hi = mid;
      else
        lo = mid;
    }
    out.k = hi;
    double r = std::round(hi);
    if (std::fabs(hi - r) < 1e-7 && r >= lo0 && g(r) >= log_n - tol) out.k = r;
  }
  // Closed form 2 log n / log^(t) n, defined once log^(t) n > 0.
  try {
    double lt = iter_log(t, n);
    if (lt > 0.0) {
      out.closed_form = 2.0 * log_n / lt;
      out.closed_form_defined = true;
    }
  } catch (const Error&) {
  }
  return out;
}

double ineq_log_shift_slack(double x, double a) {
  if (!(x > 0.0) || a < 0.0) domain("log shift needs x > 0, a >= 0");
  return std::log(x) + a / x - std::log(x + a);
}

double ineq_iter_log_shift_slack(int i, double x, double a) {
  if (i < 1 || a < 0.0) domain("iterated shift needs i >= 1, a >= 0");
  double prod = 1.0;
  for (int j = 0; j < i; ++j) prod *= iter_log(j, x);
  return iter_log(i, x) + a / prod - iter_log(i, x + a);
}

double ineq_iter_log_ratio_slack(int i, double x, double a) {
  if (i < 1 || a < 0.0) domain("iterated ratio needs i >= 1, a >= 0");
  double prod = 1.0;
  for (int j = 0; j <= i; ++j) prod *= iter_log(j, x);
  return 1.0 + a / prod - iter_log(i, x + a) / iter_log(i, x);
}

double slack_step(int t, double c) {
  if (t < 2) domain("slack_step needs t >= 2");
  double cc = std::max(c, tower(t - 1));
  if (t == 2) return 1.0;
  return std::log(cc) / iter_log(t - 1, cc);
}

double heavy_ratio(int t, double c) {
  double s = slack_step(t, c);
  double cs = c + s;
  double x = cs + std::log(cs) / iter_log(t - 1, cs);
  return std::exp(log_power_tower(t - 2, x) - log_power_tower(t - 2, c));
}

double dangerous_ratio(int t, double c) {
  double s = slack_step(t, c);
  return std::exp(log_power_tower(t - 2, c + s) - log_power_tower(t - 2, c));
}

}  // namespace lrank

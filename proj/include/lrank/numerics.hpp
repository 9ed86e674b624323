#pragma once

namespace lrank {

// All logarithms are natural.

double iter_log(int i, double x);
double tower(int i);

// Natural log of (log^(i) x)^x, i.e. x * log(log^(i) x). Needs x > tower(i-1)
// and log^(i) x > 0.
double log_power_tower(int i, double x);

// x in [tower(i), k] with (log^(i) k)^k / (log^(i) x)^x = n.
double gamma(int i, double k, double n);
// Same with n given as log n, for n beyond double range.
double gamma_log(int i, double k, double log_n);

struct SolveK {
  double k = 0;            // least k >= tower(t-2) with (log^(t-2) k)^k >= n
  double closed_form = 0;  // 2 log n / log^(t) n, 0 when undefined
  bool closed_form_defined = false;
};

SolveK solve_k(int t, double n);

// Right-hand sides of the three iterated-log inequalities; each returns the
// slack (rhs - lhs), which is >= 0 when the inequality holds.
double ineq_log_shift_slack(double x, double a);
double ineq_iter_log_shift_slack(int i, double x, double a);
double ineq_iter_log_ratio_slack(int i, double x, double a);

// Ratios whose growth is compared against c^4 and c in the trend checks.
double heavy_ratio(int t, double c);
double dangerous_ratio(int t, double c);

// s(c) = log c / log^(t-1) c, evaluated at max(c, tower(t-1)).
double slack_step(int t, double c);

}  // namespace lrank

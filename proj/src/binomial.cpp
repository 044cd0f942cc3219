#include "rtw/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rtw/error.hpp"

namespace rtw {

std::uint64_t ceil_count(long double x) {
  if (x <= 0.0L) return 0;
  const long double r = std::nearbyint(x);
  if (std::abs(x - r) <= 1e-9L * std::max(1.0L, std::abs(x))) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(x));
}

long double log_binomial_upper_tail(std::uint64_t n, long double p, std::uint64_t m) {
  constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
  if (m == 0) return 0.0L;
  if (m > n || p <= 0.0L) return kNegInf;
  if (p >= 1.0L) return 0.0L;

  const long double nn = static_cast<long double>(n);
  const auto mode = static_cast<std::uint64_t>(std::floor((nn + 1.0L) * p));
  const std::uint64_t start = std::min(n, std::max(m, mode));
  const long double s = static_cast<long double>(start);
  const long double log_start = std::lgamma(nn + 1.0L) - std::lgamma(s + 1.0L) -
                                std::lgamma(nn - s + 1.0L) + s * std::log(p) +
                                (nn - s) * std::log1p(-p);

  // Terms relative to the starting (largest) term.
  const long double odds = p / (1.0L - p);
  long double sum = 1.0L;
  long double term = 1.0L;
  for (std::uint64_t i = start; i < n; ++i) {
    term *= static_cast<long double>(n - i) / static_cast<long double>(i + 1) * odds;
    sum += term;
    if (term < 1e-24L * sum) break;
  }
  term = 1.0L;
  for (std::uint64_t i = start; i > m; --i) {
    term *= static_cast<long double>(i) / static_cast<long double>(n - i + 1) / odds;
    sum += term;
    if (term < 1e-24L * sum) break;
  }
  return log_start + std::log(sum);
}

double binomial_upper_tail(std::uint64_t n, double p, std::uint64_t m) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("binomial_upper_tail: p must lie in [0,1]");
  return static_cast<double>(std::exp(log_binomial_upper_tail(n, p, m)));
}

DispersionReport check_dispersion_lemma(double C, double epsilon, std::uint64_t n) {
  const long double p = 0.5L - static_cast<long double>(C) * epsilon;
  if (!(p > 0.0L)) throw InputError("check_dispersion_lemma: 1/2 - C*epsilon must be positive");
  if (!(epsilon > 0.0)) throw InputError("check_dispersion_lemma: epsilon must be positive");
  if (n == 0) throw InputError("check_dispersion_lemma: n must be positive");
  const long double nn = static_cast<long double>(n);
  const long double eps = epsilon;
  const long double K = 4.0L * C * C + 20.0L * C + 16.0L;
  const std::uint64_t m = ceil_count((0.5L + eps) * nn);
  const long double log_lhs = log_binomial_upper_tail(n, p, m);
  const long double log_rhs = std::log(eps * std::sqrt(nn) / 2.0L) - nn * eps * eps * K;
  return {log_lhs, log_rhs, log_lhs > log_rhs};
}

double chernoff_prune_bound(std::uint64_t t, double epsilon) {
  if (t < 1) throw InputError("chernoff_prune_bound: t must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw InputError("chernoff_prune_bound: epsilon must lie in (0, 1/2)");
  return std::exp(-static_cast<double>(t) * epsilon / 3.0);
}

ChernoffReport check_chernoff_prune(std::uint64_t t, double epsilon) {
  const double bound = chernoff_prune_bound(t, epsilon);
  const std::uint64_t m = ceil_count(2.0L * epsilon * static_cast<long double>(t));
  const double exact = binomial_upper_tail(t, epsilon, m);
  return {bound, exact, exact <= bound};
}

}  // namespace rtw

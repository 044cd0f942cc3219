#pragma once

#include <cstdint>

namespace rtw {

/// log P[Bin(n, p) >= m], summed in log space from the largest term outward.
/// Returns -infinity when the probability is zero.
long double log_binomial_upper_tail(std::uint64_t n, long double p, std::uint64_t m);

/// P[Bin(n, p) >= m].
double binomial_upper_tail(std::uint64_t n, double p, std::uint64_t m);

/// Smallest integer >= x, tolerant of x landing a rounding error above an
/// integer (so (1/2 + 0.01) * 10^4 gives 5100).
std::uint64_t ceil_count(long double x);

/// Lower-tail dispersion estimate: lhs = P[Bin(n, 1/2 - C eps) >= (1/2 + eps) n]
/// against rhs = (eps sqrt(n) / 2) e^{-n eps^2 (4C^2 + 20C + 16)}. Both sides
/// are carried as logarithms since either may underflow a double.
struct DispersionReport {
  long double log_lhs;
  long double log_rhs;
  bool holds;  // lhs > rhs
};

/// InputError when 1/2 - C eps <= 0.
DispersionReport check_dispersion_lemma(double C, double epsilon, std::uint64_t n);

/// P[Bin(t, eps) >= 2 eps t] against e^{-t eps / 3}.
struct ChernoffReport {
  double bound;        // e^{-t eps / 3}
  double exact_tail;
  bool holds;          // exact_tail <= bound
};

/// The bound e^{-t eps / 3}; InputError unless t >= 1 and 0 < eps < 1/2.
double chernoff_prune_bound(std::uint64_t t, double epsilon);
ChernoffReport check_chernoff_prune(std::uint64_t t, double epsilon);

}  // namespace rtw

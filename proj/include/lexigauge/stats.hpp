#ifndef LEXIGAUGE_STATS_HPP
#define LEXIGAUGE_STATS_HPP

// Two-sample comparison toolkit: six-number summaries, Shapiro-Wilk
// normality screening, the Wilcoxon rank-sum test with effect size r, an
// exact enumeration p-value for small samples, and Gaussian KDE series.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "lexigauge/error.hpp"

namespace lexigauge::stats {

struct Descriptives {
  double min = 0;
  double q1 = 0;
  double median = 0;
  double mean = 0;
  double q3 = 0;
  double max = 0;
};

/// Quantile of sorted data, interpolating linearly at index (n - 1) p.
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("quantile of empty data");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline Descriptives descriptives(std::span<const double> values) {
  if (values.empty()) throw DomainError("descriptives of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  Descriptives d;
  d.min = v.front();
  d.max = v.back();
  d.q1 = quantile_sorted(v, 0.25);
  d.median = quantile_sorted(v, 0.5);
  d.q3 = quantile_sorted(v, 0.75);
  // Summing sorted values makes the mean independent of input order.
  d.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  d.mean = std::clamp(d.mean, d.min, d.max);
  return d;
}

// --- normal distribution helpers -------------------------------------------

inline double normal_quantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

/// Upper tail P(Z > z), accurate far into the tail.
inline double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

inline double two_sided_p_from_z(double z) { return std::min(1.0, 2.0 * normal_upper_tail(std::fabs(z))); }

inline double z_from_two_sided_p(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("p-value must lie in (0, 1]");
  return -normal_quantile(p / 2.0);
}

/// r = |Z| / sqrt(n)
inline double effect_size_from_z(double z, std::size_t n_total) {
  if (n_total == 0) throw DomainError("effect size needs n > 0");
  return std::fabs(z) / std::sqrt(static_cast<double>(n_total));
}

inline double z_from_effect_size(double r, std::size_t n_total) {
  return r * std::sqrt(static_cast<double>(n_total));
}

// --- Shapiro-Wilk ------------------------------------------------------------

struct NormalityResult {
  double w_statistic = 1;
  double p_value = 1;
  std::size_t n = 0;
};

namespace detail {

inline double poly(std::span<const double> c, double x) {
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace detail

/// Shapiro-Wilk W with Royston's (1995, AS R94) coefficient and p-value
/// approximations. Valid for 3 <= n <= 5000.
inline NormalityResult shapiro_wilk(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3 || n > 5000) {
    throw SizeError("Shapiro-Wilk needs 3 <= n <= 5000, got n = " + std::to_string(n));
  }
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  const double range = x.back() - x.front();
  if (!(range > 1e-19 * std::max(1.0, std::fabs(x.front())))) {
    throw DegenerateInputError("Shapiro-Wilk of a sample with zero variance");
  }

  static constexpr double c1[] = {0.0, 0.221157, -0.147981, -2.07119, 4.434685, -2.706056};
  static constexpr double c2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
  static constexpr double c3[] = {0.544, -0.39978, 0.025054, -6.714e-4};
  static constexpr double c4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
  static constexpr double c5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double c6[] = {-0.4803, -0.082676, 0.0030302};
  static constexpr double g[] = {-2.273, 0.459};

  // Coefficients for the lower half, a[0] pairs with the extremes; the
  // upper half mirrors them with opposite sign.
  const std::size_t half = n / 2;
  const double an = static_cast<double>(n);
  std::vector<double> a(half);
  if (n == 3) {
    a[0] = std::sqrt(0.5);
  } else {
    double summ2 = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
      a[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
      summ2 += a[i] * a[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 = detail::poly(c1, rsn) - a[0] / ssumm2;
    std::size_t first_scaled = 1;
    double fac = 0.0;
    if (n > 5) {
      first_scaled = 2;
      const double a2 = -a[1] / ssumm2 + detail::poly(c2, rsn);
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[1] = a2;
    } else {
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
    }
    a[0] = a1;
    for (std::size_t i = first_scaled; i < half; ++i) a[i] /= -fac;
  }

  // W as the squared correlation between the ordered sample and the
  // coefficient vector, on range-scaled data.
  std::vector<double> coef(n, 0.0);
  for (std::size_t i = 0; i < half; ++i) {
    coef[i] = -a[i];
    coef[n - 1 - i] = a[i];
  }
  double sa = 0.0;
  double sx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += coef[i];
    sx += x[i] / range;
  }
  sa /= an;
  sx /= an;
  double ssa = 0.0;
  double ssx = 0.0;
  double sax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double asa = coef[i] - sa;
    const double xsx = x[i] / range - sx;
    ssa += asa * asa;
    ssx += xsx * xsx;
    sax += asa * xsx;
  }
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  const double w = 1.0 - w1;

  NormalityResult res;
  res.n = n;
  res.w_statistic = w;
  if (n == 3) {
    constexpr double pi6 = 1.90985931710274;  // 6 / pi
    constexpr double stqr = 1.04719755119660;  // pi / 3
    res.p_value = std::clamp(pi6 * (std::asin(std::sqrt(w)) - stqr), 0.0, 1.0);
    return res;
  }
  double y = std::log(w1);
  double m = 0.0;
  double s = 0.0;
  if (n <= 11) {
    const double gamma = detail::poly(g, an);
    if (y >= gamma) {
      res.p_value = 1e-99;
      return res;
    }
    y = -std::log(gamma - y);
    m = detail::poly(c3, an);
    s = std::exp(detail::poly(c4, an));
  } else {
    const double ln_n = std::log(an);
    m = detail::poly(c5, ln_n);
    s = std::exp(detail::poly(c6, ln_n));
  }
  res.p_value = std::clamp(normal_upper_tail((y - m) / s), 0.0, 1.0);
  return res;
}

// --- Wilcoxon rank-sum -------------------------------------------------------

struct RankSumResult {
  double u_statistic = 0;
  double z_score = 0;
  double p_value = 1;  // two-sided
  double effect_size_r = 0;
  std::size_t n_x = 0;
  std::size_t n_y = 0;
};

/// Midranks (1-based) of the values, ties sharing the average rank. Also
/// returns the tie term sum(t^3 - t) over tie groups.
inline std::vector<double> midranks(std::span<const double> values, double* tie_term = nullptr) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  double ties = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    const double t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  if (tie_term) *tie_term = ties;
  return ranks;
}

/// Normal approximation with tie-corrected variance and a 0.5 continuity
/// correction. U counts pairs with x above y (ties count one half).
inline RankSumResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw DomainError("rank-sum test needs two non-empty samples");
  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  double ties = 0.0;
  const auto ranks = midranks(pooled, &ties);

  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  const double n = nx + ny;
  const double rank_sum_x = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(x.size()), 0.0);

  RankSumResult r;
  r.n_x = x.size();
  r.n_y = y.size();
  r.u_statistic = rank_sum_x - nx * (nx + 1.0) / 2.0;
  const double mean = nx * ny / 2.0;
  const double var = nx * ny / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
  const double diff = r.u_statistic - mean;
  if (var > 0.0 && std::fabs(diff) > 0.5) {
    r.z_score = (diff - std::copysign(0.5, diff)) / std::sqrt(var);
  }
  r.p_value = two_sided_p_from_z(r.z_score);
  r.effect_size_r = effect_size_from_z(r.z_score, r.n_x + r.n_y);
  return r;
}

inline constexpr std::size_t kExactRankSumMaxN = 20;

/// Exact two-sided p-value by enumerating every way of assigning n_x of the
/// pooled ranks to the first sample: 2 min(P(U <= u), P(U >= u)), capped at 1.
inline double exact_rank_sum_p(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw DomainError("rank-sum test needs two non-empty samples");
  const std::size_t nx = x.size();
  const std::size_t n = nx + y.size();
  if (n > kExactRankSumMaxN) {
    throw SizeError("exact enumeration supports n_x + n_y <= 20, got " + std::to_string(n));
  }
  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  double ties = 0.0;
  const auto ranks = midranks(pooled, &ties);
  if (ties != 0.0) throw UnsupportedInputError("exact enumeration does not support tied values");

  // Without ties the ranks are 1..n, so rank sums are integers.
  const auto observed = static_cast<std::int64_t>(
      std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(nx), 0.0));

  std::uint64_t total = 0;
  std::uint64_t at_or_below = 0;
  std::uint64_t at_or_above = 0;
  std::vector<int> pick(nx);
  std::iota(pick.begin(), pick.end(), 1);
  const int top = static_cast<int>(n);
  for (;;) {
    const std::int64_t s = std::accumulate(pick.begin(), pick.end(), std::int64_t{0});
    ++total;
    if (s <= observed) ++at_or_below;
    if (s >= observed) ++at_or_above;
    // Advance to the next combination in lexicographic order.
    std::size_t i = nx;
    while (i > 0 && pick[i - 1] == top - static_cast<int>(nx - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < nx; ++j) pick[j] = pick[j - 1] + 1;
  }
  const double lower = static_cast<double>(at_or_below) / static_cast<double>(total);
  const double upper = static_cast<double>(at_or_above) / static_cast<double>(total);
  return std::min(1.0, 2.0 * std::min(lower, upper));
}

// --- kernel density ----------------------------------------------------------

struct DensitySeries {
  std::vector<double> grid;
  std::vector<double> density;
  double bandwidth = 0;
};

inline double sample_sd(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

/// Silverman's rule of thumb, 0.9 min(sd, IQR / 1.34) n^(-1/5). Falls back to
/// sd when the IQR is zero.
inline double silverman_bandwidth(std::span<const double> values) {
  const double sd = sample_sd(values);
  if (!(sd > 0.0)) throw DegenerateInputError("bandwidth of a sample with zero variance");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double iqr = quantile_sorted(v, 0.75) - quantile_sorted(v, 0.25);
  double spread = std::min(sd, iqr / 1.34);
  if (!(spread > 0.0)) spread = sd;
  return 0.9 * spread * std::pow(static_cast<double>(values.size()), -0.2);
}

inline constexpr std::size_t kMinGridPoints = 16;

/// Gaussian KDE evaluated on `grid_points` equally spaced points spanning
/// [min - 3h, max + 3h].
inline DensitySeries kde(std::span<const double> values, std::size_t grid_points = 512) {
  if (values.empty()) throw DomainError("density of an empty sample");
  if (grid_points < kMinGridPoints) throw DomainError("density grid needs at least 16 points");
  DensitySeries s;
  s.bandwidth = silverman_bandwidth(values);
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double lo = *mn - 3.0 * s.bandwidth;
  const double hi = *mx + 3.0 * s.bandwidth;
  const double norm = 1.0 / (static_cast<double>(values.size()) * s.bandwidth * std::sqrt(2.0 * M_PI));
  s.grid.resize(grid_points);
  s.density.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    s.grid[i] = lo + (hi - lo) * t;
    double acc = 0.0;
    for (double v : values) {
      const double u = (s.grid[i] - v) / s.bandwidth;
      acc += std::exp(-0.5 * u * u);
    }
    s.density[i] = acc * norm;
  }
  return s;
}

inline double trapezoid_integral(const DensitySeries& s) {
  double total = 0.0;
  for (std::size_t i = 1; i < s.grid.size(); ++i) {
    total += 0.5 * (s.density[i] + s.density[i - 1]) * (s.grid[i] - s.grid[i - 1]);
  }
  return total;
}

}  // namespace lexigauge::stats

#endif  // LEXIGAUGE_STATS_HPP

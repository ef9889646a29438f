#pragma once

// Verification utilities: adaptive Gauss-Kronrod quadrature with infinite-
// domain maps, Gram matrices, least-squares pole fitting and limit scans.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adsosc/errors.hpp"
#include "adsosc/grid.hpp"

namespace adsosc::verify {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-15;  // floor for integrals that are zero by symmetry
  int max_panels = 4000;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae on [0,1] of the half rule).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * wgk[7];
  double gauss = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = hl * xgk[std::size_t(j)];
    const double f1 = f(c - dx), f2 = f(c + dx);
    kron += wgk[std::size_t(j)] * (f1 + f2);
    if (j % 2 == 1) gauss += wg[std::size_t(j / 2)] * (f1 + f2);
  }
  return {a, b, kron * hl, std::abs((kron - gauss) * hl)};
}

}  // namespace detail

/// Adaptive GK15 on [a, b]: bisect the panel with the largest error estimate
/// until the summed estimate meets max(rel_tol |I|, abs_tol).
template <class F>
QuadratureResult adaptive_quad(F&& f, double a, double b, const QuadOptions& opt = {}) {
  if (!(opt.rel_tol > 0)) throw DomainError("adaptive_quad: rel_tol must be > 0");
  if (!(std::isfinite(a) && std::isfinite(b))) throw DomainError("adaptive_quad: finite limits required");
  if (a == b) return {};
  std::priority_queue<detail::Panel> heap;
  auto first = detail::gk15(f, a, b);
  double value = first.value, error = first.error;
  heap.push(first);
  int panels = 1;
  while (error > std::max(opt.rel_tol * std::abs(value), opt.abs_tol)) {
    if (panels >= opt.max_panels)
      throw ConvergenceError("adaptive_quad: panel budget exhausted (error " + std::to_string(error) + ")");
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // re-sum from the panels for a deterministic, drift-free total
  double total = 0.0, err = 0.0;
  std::vector<detail::Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& p, const auto& q) { return p.a < q.a; });
  for (const auto& p : all) {
    total += p.value;
    err += p.error;
  }
  return {total, err, panels};
}

/// Integral over the real line with x = scale tan(theta), theta in (-pi/2, pi/2).
template <class F>
QuadratureResult integrate_real_line(F&& f, double scale = 1.0, const QuadOptions& opt = {}) {
  auto g = [&](double th) {
    const double c = std::cos(th);
    if (c <= 0) return 0.0;
    const double v = f(scale * std::tan(th));
    return v * scale / (c * c);
  };
  const double h = 0.5 * std::numbers::pi;
  auto left = adaptive_quad(g, -h, 0.0, opt);
  auto right = adaptive_quad(g, 0.0, h, opt);
  return {left.value + right.value, left.error_estimate + right.error_estimate, left.panels + right.panels};
}

/// Integral over (0, inf) with r = scale e^u, u truncated to [-u_cut, u_cut].
template <class F>
QuadratureResult integrate_half_line(F&& f, double scale = 1.0, const QuadOptions& opt = {},
                                     double u_cut = 60.0) {
  auto g = [&](double u) {
    const double r = scale * std::exp(u);
    return f(r) * r;
  };
  // split at u = 0 and at the decades where the integrand lives so that the
  // first panels are not blind to narrow peaks
  const std::array<double, 7> cuts = {-u_cut, -10.0, -3.0, 0.0, 3.0, 10.0, u_cut};
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto part = adaptive_quad(g, cuts[i], cuts[i + 1], opt);
    out.value += part.value;
    out.error_estimate += part.error_estimate;
    out.panels += part.panels;
  }
  return out;
}

enum class Domain { real_line, half_line };

/// Matrix of plain-measure overlaps <n|m> for n, m <= n_max; family(n, x) evaluates state n.
template <class Family>
Eigen::MatrixXd gram_matrix(Family&& family, int n_max, Domain domain, double scale = 1.0,
                            const QuadOptions& opt = {1e-12, 1e-14, 4000}) {
  if (n_max < 0) throw DomainError("gram_matrix: n_max must be >= 0");
  const int dim = n_max + 1;
  Eigen::MatrixXd g(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int m = n; m < dim; ++m) {
      auto integrand = [&](double x) { return family(n, x) * family(m, x); };
      const double v = domain == Domain::real_line ? integrate_real_line(integrand, scale, opt).value
                                                   : integrate_half_line(integrand, scale, opt).value;
      g(n, m) = v;
      g(m, n) = v;
    }
  }
  return g;
}

struct PoleFit {
  double location = 0.0;  // E_p
  double residue = 0.0;   // R in G ~ R/(E^2 - E_p^2)
  double fit_residual = 0.0;
  int n_index = 0;
  int samples = 0;
};

/// `count` energies around `center` (the center itself is omitted), offsets
/// log-spaced in [d_min, d_max] with alternating signs.
inline std::vector<double> pole_window(double center, int count = 21, double d_min = 1e-4,
                                       double d_max = 1e-2) {
  if (count < 5) throw DomainError("pole_window: need at least 5 samples");
  std::vector<double> out;
  out.reserve(std::size_t(count));
  for (int i = 0; i < count; ++i) {
    const double t = double(i) / double(count - 1);
    const double d = d_min * std::pow(d_max / d_min, t);
    out.push_back(center + (i % 2 == 0 ? d : -d));
  }
  return out;
}

/// Fit 1/G as a cubic in s = E^2 - s0 and return the zero of that cubic as the
/// pole E_p^2, with R = 1/p'(root). Throws FitError if the relative RMS misfit
/// of the cubic exceeds `threshold`.
inline PoleFit fit_pole(const std::vector<std::pair<double, double>>& samples, int n_index = 0,
                        double threshold = 1e-6) {
  const int m = int(samples.size());
  if (m < 5) throw DomainError("fit_pole: need at least 5 samples");
  double s0 = 0.0;
  for (const auto& [e, g] : samples) {
    if (!std::isfinite(g) || g == 0.0) throw DomainError("fit_pole: non-finite or zero sample");
    s0 += e * e;
  }
  s0 /= m;
  double scale = 0.0;
  for (const auto& [e, g] : samples) scale = std::max(scale, std::abs(e * e - s0));
  if (!(scale > 0)) throw DomainError("fit_pole: samples must span distinct energies");
  Eigen::MatrixXd A(m, 4);
  Eigen::VectorXd y(m);
  double ymax = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = (samples[std::size_t(i)].first * samples[std::size_t(i)].first - s0) / scale;
    A(i, 0) = 1.0;
    A(i, 1) = t;
    A(i, 2) = t * t;
    A(i, 3) = t * t * t;
    y(i) = 1.0 / samples[std::size_t(i)].second;
    ymax = std::max(ymax, std::abs(y(i)));
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  const double misfit = std::sqrt((A * c - y).squaredNorm() / m) / ymax;
  auto p = [&](double t) { return c(0) + t * (c(1) + t * (c(2) + t * c(3))); };
  auto dp = [&](double t) { return c(1) + t * (2 * c(2) + t * 3 * c(3)); };
  if (c(1) == 0.0) throw FitError("fit_pole: flat fit, no isolated zero");
  double t = -c(0) / c(1);
  for (int it = 0; it < 50; ++it) {
    const double step = p(t) / dp(t);
    t -= step;
    if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(t))) break;
  }
  PoleFit fit;
  fit.fit_residual = misfit;
  fit.n_index = n_index;
  fit.samples = m;
  const double ep2 = s0 + t * scale;
  if (!(ep2 > 0)) throw FitError("fit_pole: fitted pole has E_p^2 <= 0");
  fit.location = std::sqrt(ep2);
  fit.residue = scale / dp(t);
  if (!(misfit <= threshold))
    throw FitError("fit_pole: relative misfit " + std::to_string(misfit) + " exceeds threshold");
  return fit;
}

struct LimitRow {
  double N = 0.0;
  double value = 0.0;
  double model = 0.0;
  double deviation = 0.0;  // value/model - 1
};

struct LimitScan {
  std::vector<LimitRow> rows;
  double exponent = 0.0;     // fitted p in value ~ C N^p
  double coefficient = 0.0;  // fitted C
};

/// Tabulate quantity(N) against model(N) and fit a power law in log-log space.
template <class Q, class M>
LimitScan limit_scan(Q&& quantity, const std::vector<double>& N_values, M&& model) {
  if (N_values.size() < 2) throw DomainError("limit_scan: need at least two N values");
  for (std::size_t i = 1; i < N_values.size(); ++i)
    if (!(N_values[i] > N_values[i - 1])) throw DomainError("limit_scan: N values must ascend");
  LimitScan out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(N_values.size());
  for (double N : N_values) {
    LimitRow row;
    row.N = N;
    row.value = quantity(N);
    row.model = model(N);
    row.deviation = row.model != 0.0 ? row.value / row.model - 1.0 : row.value;
    out.rows.push_back(row);
    const double lx = std::log(N), ly = std::log(std::abs(row.value));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  out.exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  out.coefficient = std::exp((sy - out.exponent * sx) / k);
  return out;
}

/// max |f - g| / max |g| over the sample points.
template <class F, class G>
double relative_sup_distance(F&& f, G&& g, const std::vector<double>& points) {
  double num = 0.0, den = 0.0;
  for (double x : points) {
    const double gv = g(x);
    num = std::max(num, std::abs(f(x) - gv));
    den = std::max(den, std::abs(gv));
  }
  return den > 0 ? num / den : num;
}

}  // namespace adsosc::verify

#pragma once

// Reference computations for the tests. Nothing here calls into the library;
// each quantity is recomputed by the most direct route available.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Objective values straight from adjacency lists.
inline int cut(int n, const std::vector<std::pair<int, int>>& edges, std::uint64_t x) {
  std::vector<int> side(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) side[static_cast<std::size_t>(i)] = (x >> i) & 1 ? 1 : 0;
  int c = 0;
  for (auto [u, v] : edges) c += side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)];
  return c;
}

inline std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  return e;
}

// counts[c] = number of x in [first, 2^n) with cut value c
inline std::vector<std::uint64_t> cut_counts(int n, const std::vector<std::pair<int, int>>& edges,
                                             std::uint64_t first = 1) {
  std::vector<std::uint64_t> counts(edges.size() + 1, 0);
  for (std::uint64_t x = first; x < (std::uint64_t{1} << n); ++x) ++counts[static_cast<std::size_t>(cut(n, edges, x))];
  return counts;
}

// Per-assignment amplitudes. Outcome 1 multiplies by (e^{i phi} - 1)/2,
// outcome 0 by (e^{i phi} + 1)/2.
inline std::vector<std::complex<double>> amplitudes(const std::vector<double>& phases, const std::string& y) {
  const double a0 = 1.0 / std::sqrt(static_cast<double>(phases.size()));
  std::vector<std::complex<double>> amp(phases.size(), a0);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const auto e = std::polar(1.0, phases[i]);
    for (char c : y) amp[i] *= (c == '1' ? e - 1.0 : e + 1.0) / 2.0;
  }
  return amp;
}

inline double sequence_probability(const std::vector<double>& phases, const std::string& y) {
  double p = 0.0;
  for (auto a : amplitudes(phases, y)) p += std::norm(a);
  return p;
}

inline std::vector<double> conditional(const std::vector<double>& phases, const std::string& y) {
  auto amp = amplitudes(phases, y);
  std::vector<double> out(amp.size());
  double total = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i) total += out[i] = std::norm(amp[i]);
  for (auto& v : out) v /= total;
  return out;
}

// Composite Simpson rule.
template <class F>
double simpson(F f, double a, double b, int panels = 20000) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline double erf_quadrature(double x) {
  return 2.0 / std::sqrt(kPi) * simpson([](double t) { return std::exp(-t * t); }, 0.0, x);
}

// Continuum average over phi uniform on [0, pi] of (1-cos)^q (1+cos)^r / 2^(q+r).
inline double continuum_moment(int q, int r) {
  return simpson([&](double phi) {
           return std::pow((1 - std::cos(phi)) / 2, q) * std::pow((1 + std::cos(phi)) / 2, r);
         }, 0.0, kPi) / kPi;
}

// Central binomial ratio C(2M, M) / 4^M through log-gamma.
inline double central_ratio(int m) {
  return std::exp(std::lgamma(2.0 * m + 1) - 2 * std::lgamma(m + 1.0) - 2.0 * m * std::log(2.0));
}

struct Frac {
  __int128 n = 0;
  __int128 d = 1;
  Frac() = default;
  Frac(long long num, long long den = 1) : n(num), d(den) { norm(); }
  void norm() {
    if (d < 0) n = -n, d = -d;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) a %= b, std::swap(a, b);
    if (a > 1) n /= a, d /= a;
  }
  friend Frac operator+(Frac a, Frac b) { Frac r; r.n = a.n * b.d + b.n * a.d; r.d = a.d * b.d; r.norm(); return r; }
  friend Frac operator*(Frac a, Frac b) { Frac r; r.n = a.n * b.n; r.d = a.d * b.d; r.norm(); return r; }
  friend Frac operator/(Frac a, Frac b) { Frac r; r.n = a.n * b.d; r.d = a.d * b.n; r.norm(); return r; }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
  long long num() const { return static_cast<long long>(n); }
  long long den() const { return static_cast<long long>(d); }
};

inline Frac power(Frac f, int e) {
  Frac r(1);
  while (e-- > 0) r = r * f;
  return r;
}

}  // namespace oracle

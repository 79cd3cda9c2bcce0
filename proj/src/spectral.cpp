#include "asa/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace asa::spectral {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        // direct twiddles; the recurrence drifts for large transforms
        const std::complex<double> w(std::cos(ang * static_cast<double>(k)), std::sin(ang * static_cast<double>(k)));
        const auto u = data[i + k];
        const auto v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
      }
    }
  }
}

Series analyze(std::span<const double> samples) {
  const std::size_t m = samples.size();
  std::vector<std::complex<double>> buf(samples.begin(), samples.end());
  fft(buf, false);
  Series s;
  const std::size_t deg = m / 2 - 1;
  s.a.assign(deg + 1, 0.0);
  s.b.assign(deg + 1, 0.0);
  const double inv = 1.0 / static_cast<double>(m);
  s.a[0] = buf[0].real() * inv;
  for (std::size_t k = 1; k <= deg; ++k) {
    s.a[k] = 2.0 * buf[k].real() * inv;
    s.b[k] = -2.0 * buf[k].imag() * inv;
  }
  return s;
}

std::vector<double> synthesize(const Series& s, std::size_t m, int derivative) {
  std::vector<std::complex<double>> buf(m, {0.0, 0.0});
  const std::size_t deg = std::min(s.degree(), m / 2 - 1);
  if (derivative == 0) buf[0] = s.a[0];
  for (std::size_t k = 1; k <= deg; ++k) {
    // coefficient of e^{ikt}: (a - i b)/2, differentiated d times
    std::complex<double> c(0.5 * s.a[k], -0.5 * s.b[k]);
    const std::complex<double> ik(0.0, static_cast<double>(k));
    for (int d = 0; d < derivative; ++d) c *= ik;
    buf[k] = c;
    buf[m - k] = std::conj(c);
  }
  fft(buf, true);
  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = buf[j].real();
  return out;
}

void truncate(Series& s, double rel_tol) {
  double scale = 0.0;
  for (std::size_t k = 0; k < s.a.size(); ++k) scale = std::max({scale, std::abs(s.a[k]), std::abs(s.b[k])});
  std::size_t keep = s.a.size();
  while (keep > 1 && std::abs(s.a[keep - 1]) <= rel_tol * scale && std::abs(s.b[keep - 1]) <= rel_tol * scale) --keep;
  s.a.resize(keep);
  s.b.resize(keep);
}

namespace {

GaussRule build_rule(std::size_t n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace asa::spectral

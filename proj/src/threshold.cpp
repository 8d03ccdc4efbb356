#include "gdc/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "gdc/errors.hpp"
#include "gdc/rng.hpp"

namespace gdc {

namespace {

double poly(const double* c, int degree, double x) {
  double acc = c[degree];
  for (int i = degree - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

template <typename Draw>
std::vector<Draw> run_blocks(std::size_t count, std::uint64_t seed, int jobs,
                             const std::function<Draw(Rng&)>& draw) {
  std::vector<Draw> out(count);
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  parallel_blocks(blocks, jobs, [&](std::size_t b) {
    Rng rng(seed, b);
    const std::size_t end = std::min(count, (b + 1) * kSampleBlock);
    for (std::size_t i = b * kSampleBlock; i < end; ++i) out[i] = draw(rng);
  });
  return out;
}

void check_sampler_n(int n) {
  if (n < 1 || n > 31) throw DomainError("threshold sampler needs 1 <= n <= 31");
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  static const double a[] = {3.3871328727963666080e0,  1.3314166789178437745e+2,
                             1.9715909503065514427e+3, 1.3731693765509461125e+4,
                             4.5921953931549871457e+4, 6.7265770927008700853e+4,
                             3.3430575583588128105e+4, 2.5090809287301226727e+3};
  static const double b[] = {1.0,
                             4.2313330701600911252e+1, 6.8718700749205790830e+2,
                             5.3941960214247511077e+3, 2.1213794301586595867e+4,
                             3.9307895800092710610e+4, 2.8729085735721942674e+4,
                             5.2264952788528545610e+3};
  static const double c[] = {1.42343711074968357734e0,  4.63033784615654529590e0,
                             5.76949722146069140550e0,  3.64784832476320460504e0,
                             1.27045825245236838258e0,  2.41780725177450611770e-1,
                             2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static const double d[] = {1.0,
                             2.05319162663775882187e0,  1.67638483018380384940e0,
                             6.89767334985100004550e-1, 1.48103976427480074590e-1,
                             1.51986665636164571966e-2, 5.47593808499534494600e-4,
                             1.05075007164441684324e-9};
  static const double e[] = {6.65790464350110377720e0,  5.46378491116411436990e0,
                             1.78482653991729133580e0,  2.96560571828504891230e-1,
                             2.65321895265761230930e-2, 1.24266094738807843860e-3,
                             2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static const double f[] = {1.0,
                             5.99832206555887937690e-1, 1.36929880922735805310e-1,
                             1.48753612908506148525e-2, 7.86869131145613259100e-4,
                             1.84631831751005468180e-5, 1.42151175831644588870e-7,
                             2.04426310338993978564e-15};
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal quantile needs p in (0,1)");
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * poly(a, 7, r) / poly(b, 7, r);
  }
  double r = std::sqrt(-std::log(q < 0 ? p : 1.0 - p));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = poly(c, 7, r) / poly(d, 7, r);
  } else {
    r -= 5.0;
    value = poly(e, 7, r) / poly(f, 7, r);
  }
  return q < 0 ? -value : value;
}

double gaussian_xi_cdf(double r, double h, double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("xi CDF argument must lie in (0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("correlation r must lie in [0,1)");
  if (r == 0.0) return t >= normal_cdf(-h) ? 1.0 : 0.0;
  return normal_cdf((h - std::sqrt(1.0 - r) * normal_quantile(1.0 - t)) / std::sqrt(r));
}

std::vector<double> gaussian_xi_sampler(double r, double h, std::size_t count,
                                        std::uint64_t seed, int jobs) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("correlation r must lie in [0,1)");
  const double sr = std::sqrt(r), sq = std::sqrt(1.0 - r);
  return run_blocks<double>(count, seed, jobs, [&](Rng& rng) {
    return normal_cdf(-(h - sr * rng.normal()) / sq);
  });
}

std::vector<Config> gaussian_threshold_sampler(double r, double h, int n, std::size_t count,
                                               std::uint64_t seed, int jobs) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("correlation r must lie in [0,1]");
  check_sampler_n(n);
  const double sr = std::sqrt(r), sq = std::sqrt(1.0 - r);
  return run_blocks<Config>(count, seed, jobs, [&](Rng& rng) {
    const double w = sr * rng.normal();
    Config x = 0;
    for (int i = 0; i < n; ++i) {
      if (w + sq * rng.normal() >= h) x |= Config{1} << i;
    }
    return x;
  });
}

double stable_variate(double alpha, Rng& rng) {
  const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
  const double w = rng.exponential();
  if (alpha == 1.0) return std::tan(v);
  return std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
         std::pow(std::cos(v - alpha * v) / w, (1.0 - alpha) / alpha);
}

std::vector<Config> stable_threshold_sampler(double alpha, double a, double h, int n,
                                             std::size_t count, std::uint64_t seed, int jobs) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("stability index must lie in (0,2]");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("mixing weight a must lie in (0,1)");
  check_sampler_n(n);
  const double b = std::pow(1.0 - std::pow(a, alpha), 1.0 / alpha);
  return run_blocks<Config>(count, seed, jobs, [&](Rng& rng) {
    const double w = a * stable_variate(alpha, rng);
    Config x = 0;
    for (int i = 0; i < n; ++i) {
      if (w + b * stable_variate(alpha, rng) >= h) x |= Config{1} << i;
    }
    return x;
  });
}

}  // namespace gdc

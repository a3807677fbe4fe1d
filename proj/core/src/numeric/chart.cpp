#include "finsler/numeric/chart.hpp"

#include <stdexcept>

namespace finsler::numeric {

bool BallDomain::contains(std::span<const double> x) const {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double r = std::sqrt(r2);
  return r >= r_min && r < r_max;
}

std::vector<double> BallDomain::sample(int n, std::mt19937_64& rng) const {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  double r2 = 0.0;
  do {
    r2 = 0.0;
    for (double& v : x) {
      v = normal(rng);
      r2 += v * v;
    }
  } while (r2 == 0.0);
  const double lo = std::pow(r_min, n);
  const double hi = std::pow(r_max, n);
  const double r = std::pow(lo + unit(rng) * (hi - lo), 1.0 / n);
  const double scale = r / std::sqrt(r2);
  for (double& v : x) v *= scale;
  return x;
}

ChartPtr euclidean_chart(int n, BallDomain domain, double lambda) {
  if (n < 1) throw std::invalid_argument("chart dimension must be positive");
  return make_chart(
      "euclidean", n, domain,
      [lambda](int dim, const auto* x, auto* a, auto* b) {
        for (int i = 0; i < dim; ++i) {
          a[i * dim + i] = 1.0;
          b[i] = lambda * x[i];
        }
      },
      [lambda](std::span<const double>) { return lambda; });
}

ChartPtr klein_chart(int n, double r_max) {
  if (n < 1) throw std::invalid_argument("chart dimension must be positive");
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("Klein chart radius must lie in (0, 1)");
  return make_chart(
      "klein", n, BallDomain{0.0, r_max},
      [](int dim, const auto* x, auto* a, auto* b) {
        using S = std::decay_t<decltype(x[0])>;
        S r2(0.0);
        for (int i = 0; i < dim; ++i) r2 += x[i] * x[i];
        const S w = S(1.0) - r2;
        const S w2 = w * w;
        using std::sqrt;
        const S w32 = w * sqrt(w);
        for (int i = 0; i < dim; ++i) {
          for (int j = 0; j < dim; ++j) a[i * dim + j] = x[i] * x[j] / w2;
          a[i * dim + i] += S(1.0) / w;
          b[i] = x[i] / w32;
        }
      },
      [](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return 1.0 / std::sqrt(1.0 - r2);
      });
}

ChartPtr tilted_chart(int n, double r_max) {
  if (n < 2) throw std::invalid_argument("tilted chart needs n >= 2");
  return make_chart("tilted", n, BallDomain{0.0, r_max}, [](int dim, const auto* x, auto* a, auto* b) {
    using S = std::decay_t<decltype(x[0])>;
    S r2(0.0);
    for (int i = 0; i < dim; ++i) r2 += x[i] * x[i];
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) a[i * dim + j] = S(0.1) * x[i] * x[j];
      a[i * dim + i] += S(1.0) + S(0.2) * r2;
    }
    b[0] = S(0.2) + x[1];
    for (int k = 1; k < dim; ++k) b[k] = S(0.1) * x[k] * x[k];
  });
}

}  // namespace finsler::numeric

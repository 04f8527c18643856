// Type-II ML grid fit of an ARD-SE GP on the whitened training subsample,
// mirroring the hyperparameter-selection stage ahead of the RFF models.
#include <cstdio>
#include <limits>

#include "tgp/data_io.hpp"

using namespace tgp;

int main() {
  Dataset all = load_csv_regression("data/california/housing.csv",
                                    {"longitude", "latitude"},
                                    "median_house_value",
                                    {"median_house_value"});
  for (std::uint64_t seed : {1, 2, 3}) {
    auto [sub, rest] = split(all, 2000.0 / all.size(), seed);
    (void)rest;
    auto [train, test] = split(sub, 0.5, seed + 10);
    whiten_fit_apply(train, {&test});

    const int n = train.size();
    double best = -std::numeric_limits<double>::infinity();
    double b_l1 = 0, b_l2 = 0, b_sf = 0, b_nv = 0;
    for (double l1 : {0.1, 0.2, 0.35, 0.5, 0.75, 1.0, 1.5})
      for (double l2 : {0.1, 0.2, 0.35, 0.5, 0.75, 1.0, 1.5})
        for (double sf : {0.5, 1.0, 2.0})
          for (double nv : {0.05, 0.1, 0.2, 0.3, 0.5}) {
            Eigen::MatrixXd k(n, n);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j <= i; ++j) {
                const double d1 = train.x(i, 0) - train.x(j, 0);
                const double d2 = train.x(i, 1) - train.x(j, 1);
                k(i, j) = k(j, i) =
                    sf * std::exp(-0.5 * (d1 * d1 / (l1 * l1) +
                                          d2 * d2 / (l2 * l2)));
              }
            k.diagonal().array() += nv;
            Eigen::LLT<Eigen::MatrixXd> llt(k);
            if (llt.info() != Eigen::Success) continue;
            const Eigen::VectorXd alpha = llt.solve(train.y);
            double logdet = 0;
            for (int i = 0; i < n; ++i)
              logdet += 2 * std::log(llt.matrixL()(i, i));
            const double lml = -0.5 * train.y.dot(alpha) - 0.5 * logdet;
            if (lml > best) {
              best = lml;
              b_l1 = l1; b_l2 = l2; b_sf = sf; b_nv = nv;
            }
          }
    std::printf("seed %llu: l1=%.2f l2=%.2f sf=%.2f nv=%.2f lml=%.1f\n",
                static_cast<unsigned long long>(seed), b_l1, b_l2, b_sf, b_nv,
                best);
    std::fflush(stdout);
  }
  return 0;
}

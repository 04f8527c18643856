#include <cstdio>
#include <cstdlib>
#include <string>

#include "tgp/data_io.hpp"
#include "tgp/inference.hpp"
#include "tgp/model.hpp"

using namespace tgp;

int main(int argc, char** argv) {
  const int n_feat = argc > 1 ? std::atoi(argv[1]) : 20;
  const double ell = argc > 2 ? std::atof(argv[2]) : 0.5;
  const double noise = argc > 3 ? std::atof(argv[3]) : 0.3;
  const double step = argc > 4 ? std::atof(argv[4]) : 0.004;

  Dataset all = load_csv_regression("data/california/housing.csv",
                                    {"longitude", "latitude"},
                                    "median_house_value",
                                    {"median_house_value"});
  for (std::uint64_t seed : {1, 2, 3}) {
    auto [sub, rest] = split(all, 2000.0 / all.size(), seed);
    (void)rest;
    auto [train, test] = split(sub, 0.5, seed + 10);
    whiten_fit_apply(train, {&test});

    const int r = 5;
    TgpModel m;
    m.maps = {build_rff(se_kernel(1.0, ell), n_feat, seed),
              build_rff(se_kernel(1.0, ell), n_feat, seed + 100)};
    m.noise_var = noise;
    m.prior_u_var = 1.0 / r;
    m.prior_w_var = 1.0;
    m.weights =
        sample_prior({n_feat, n_feat}, r, m.prior_u_var, m.prior_w_var, seed);

    HmcConfig hc;
    hc.leapfrog = 10;
    hc.step_w = hc.step_u = step;
    hc.iterations = 300;
    hc.warmup = 300;
    hc.chains = 2;
    hc.seed = seed;
    const ChainSet cs = hmc(m, train, hc);
    const PredictiveSummary ps = posterior_predict(cs, m, test.x);
    const double tgp_rmse = rmse(ps.mean, test.y);

    const int p = n_feat * n_feat;
    Eigen::MatrixXd phi(train.size(), p), phi_test(test.size(), p);
    auto fill = [&](const Dataset& ds, Eigen::MatrixXd& out) {
      for (int i = 0; i < ds.size(); ++i) {
        const Eigen::VectorXd f1 =
            m.maps[0]->apply(ds.x.row(i).head(1).transpose()).to_dense();
        const Eigen::VectorXd f2 =
            m.maps[1]->apply(ds.x.row(i).tail(1).transpose()).to_dense();
        for (int a = 0; a < n_feat; ++a)
          for (int b = 0; b < n_feat; ++b)
            out(i, a * n_feat + b) = f1[a] * f2[b];
      }
    };
    fill(train, phi);
    fill(test, phi_test);
    const Eigen::MatrixXd a = phi.transpose() * phi / m.noise_var +
                              Eigen::MatrixXd::Identity(p, p);
    const Eigen::VectorXd theta =
        a.ldlt().solve(phi.transpose() * train.y / m.noise_var);
    const double full_rmse = rmse(phi_test * theta, test.y);

    double acc = 0;
    for (double x : cs.accept_rate) acc += x / cs.accept_rate.size();
    std::printf("n=%d ell=%.2f nv=%.2f step=%.4f seed %llu: "
                "rank5 %.4f full %.4f accept %.2f\n",
                n_feat, ell, noise, step,
                static_cast<unsigned long long>(seed), tgp_rmse, full_rmse,
                acc);
    std::fflush(stdout);
  }
  return 0;
}

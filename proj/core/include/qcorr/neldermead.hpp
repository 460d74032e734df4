#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace qcorr {

struct NelderMeadOptions {
  int max_iters = 500;
  double ftol = 1e-10;     // stop when the simplex f-spread drops below this
  double init_step = 0.3;  // initial simplex edge length
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f;
  int iterations;
};

/// Plain downhill simplex, minimizing f.
inline NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& x0,
                                    const NelderMeadOptions& opt = {}) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (int i = 0; i < n; ++i) pts[i + 1](i) += opt.init_step;
  for (int i = 0; i <= n; ++i) fv[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  int iter = 0;
  for (; iter < opt.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const int best = order[0], worst = order[n], second_worst = order[n - 1];
    if (fv[worst] - fv[best] < opt.ftol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= n;

    const Eigen::VectorXd refl = centroid + (centroid - pts[worst]);
    const double f_refl = f(refl);

    if (f_refl < fv[best]) {
      const Eigen::VectorXd expd = centroid + 2.0 * (centroid - pts[worst]);
      const double f_expd = f(expd);
      if (f_expd < f_refl) {
        pts[worst] = expd;
        fv[worst] = f_expd;
      } else {
        pts[worst] = refl;
        fv[worst] = f_refl;
      }
    } else if (f_refl < fv[second_worst]) {
      pts[worst] = refl;
      fv[worst] = f_refl;
    } else {
      const Eigen::VectorXd contr = centroid + 0.5 * (pts[worst] - centroid);
      const double f_contr = f(contr);
      if (f_contr < fv[worst]) {
        pts[worst] = contr;
        fv[worst] = f_contr;
      } else {
        // shrink toward the best vertex
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
          fv[i] = f(pts[i]);
        }
      }
    }
  }

  const auto it = std::min_element(fv.begin(), fv.end());
  return {pts[static_cast<int>(it - fv.begin())], *it, iter};
}

}  // namespace qcorr

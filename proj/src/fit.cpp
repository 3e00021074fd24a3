// Copyright 2026 The rbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbsim/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

namespace rbsim {

namespace {

double model(double a, double alpha, double b, double m) {
    return a * std::pow(alpha, m) + b;
}

}  // namespace

DecayFit fit_decay(const std::vector<DecayPoint>& curve, double b0_init) {
    const int n = static_cast<int>(curve.size());
    {
        std::set<double> lens;
        for (const auto& p : curve) lens.insert(p.m);
        if (lens.size() < 3)
            throw FitError("fit_decay: need at least 3 distinct lengths");
    }

    double ymin = curve[0].mean, ymax = curve[0].mean;
    for (const auto& p : curve) {
        ymin = std::min(ymin, p.mean);
        ymax = std::max(ymax, p.mean);
    }
    if (ymax - ymin < 1e-9) {
        DecayFit f;
        f.alpha = 1.0;
        f.b = b0_init;
        f.a = curve[0].mean - b0_init;
        f.degenerate = true;
        f.converged = true;
        return f;
    }

    // effective sigmas; all-zero stderr means unweighted
    double minpos = 0;
    for (const auto& p : curve)
        if (p.stderr_ > 0 && (minpos == 0 || p.stderr_ < minpos)) minpos = p.stderr_;
    const bool weighted = minpos > 0;
    std::vector<double> sig(n, 1.0);
    if (weighted)
        for (int i = 0; i < n; ++i) sig[i] = std::max(curve[i].stderr_, minpos);

    // initialization
    double b = b0_init;
    double a = curve[0].mean - b;
    double alpha = 0.95;
    {
        // log-linear regression of (mean - b0) vs m
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (const auto& p : curve) {
            double v = p.mean - b0_init;
            if (v > 1e-12) {
                double lx = p.m, ly = std::log(v);
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
                ++cnt;
            }
        }
        if (cnt >= 2 && sxx * cnt - sx * sx > 1e-12) {
            double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
            double a0 = std::exp((sy - slope * sx) / cnt);
            alpha = std::clamp(std::exp(slope), 1e-6, 1.0);
            a = a0;
        }
    }

    auto chisq = [&](double pa, double pal, double pb) {
        double s = 0;
        for (int i = 0; i < n; ++i) {
            double r = (model(pa, pal, pb, curve[i].m) - curve[i].mean) / sig[i];
            s += r * r;
        }
        return s;
    };

    double lambda = 1e-3;
    double cost = chisq(a, alpha, b);
    Eigen::Matrix3d jtj;
    bool converged = false;
    for (int iter = 0; iter < 300; ++iter) {
        Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
        Eigen::Vector3d g = Eigen::Vector3d::Zero();
        for (int i = 0; i < n; ++i) {
            double m = curve[i].m;
            double am = std::pow(alpha, m);
            Eigen::Vector3d j;
            j << am, (m > 0 && alpha > 0) ? a * m * std::pow(alpha, m - 1) : 0.0, 1.0;
            j /= sig[i];
            double r = (model(a, alpha, b, m) - curve[i].mean) / sig[i];
            h += j * j.transpose();
            g += j * r;
        }
        jtj = h;
        Eigen::Matrix3d damped = h;
        for (int k = 0; k < 3; ++k) damped(k, k) *= (1.0 + lambda);
        Eigen::Vector3d step = damped.ldlt().solve(-g);
        double a2 = a + step(0);
        double alpha2 = std::clamp(alpha + step(1), 0.0, 1.0);
        double b2 = b + step(2);
        double cost2 = chisq(a2, alpha2, b2);
        if (cost2 <= cost) {
            double delta = std::abs(a2 - a) + std::abs(alpha2 - alpha) + std::abs(b2 - b);
            a = a2;
            alpha = alpha2;
            b = b2;
            cost = cost2;
            lambda = std::max(lambda * 0.3, 1e-12);
            if (delta < 1e-13) {
                converged = true;
                break;
            }
        } else {
            lambda *= 10;
            if (lambda > 1e12) break;
        }
    }
    if (!converged && cost > 1e-6 && lambda > 1e12)
        throw FitError("fit_decay: did not converge");

    DecayFit f;
    f.a = a;
    f.alpha = alpha;
    f.b = b;
    f.residual = cost;
    f.converged = true;
    Eigen::Matrix3d cov = jtj.inverse();
    if (!weighted) {
        double s2 = cost / std::max(1, n - 3);
        cov *= s2;
    }
    f.a_err = std::sqrt(std::max(0.0, cov(0, 0)));
    f.alpha_err = std::sqrt(std::max(0.0, cov(1, 1)));
    f.b_err = std::sqrt(std::max(0.0, cov(2, 2)));
    return f;
}

}  // namespace rbsim

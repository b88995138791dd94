#pragma once

// Wolfe's minimum-norm-point algorithm in exact arithmetic. The nearest point of a polytope
// to the origin decides containment (distance zero, with a convex-combination certificate)
// and otherwise yields the separating direction of steepest descent.

#include "hstab/linear_algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hstab {

struct MinNormPoint {
    Vector point;                      // nearest point of conv(points) to the origin
    std::vector<std::size_t> support;  // indices of the corral
    Vector weights;                    // positive convex weights on `support`

    bool is_origin() const {
        return std::all_of(point.begin(), point.end(), [](const Rational& x) { return x == 0; });
    }
};

namespace detail {

// Minimum-norm point of the affine hull of the selected points, as affine coefficients.
inline Vector affine_min_norm(const std::vector<Vector>& pts, const std::vector<std::size_t>& sel) {
    const std::size_t k = sel.size();
    Matrix a(k + 1, Vector(k + 1, Rational(0)));
    Vector b(k + 1, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(pts[sel[i]], pts[sel[j]]);
        a[i][k] = 1;
        a[k][i] = 1;
    }
    b[k] = 1;
    auto sol = solve(std::move(a), std::move(b));
    if (!sol) throw std::logic_error("min-norm corral lost affine independence");
    sol->resize(k);
    return *sol;
}

inline Vector combine(const std::vector<Vector>& pts, const std::vector<std::size_t>& sel, const Vector& w) {
    Vector x(pts.front().size(), Rational(0));
    for (std::size_t i = 0; i < sel.size(); ++i)
        for (std::size_t c = 0; c < x.size(); ++c) x[c] += w[i] * pts[sel[i]][c];
    return x;
}

}  // namespace detail

inline MinNormPoint min_norm_point(const std::vector<Vector>& pts) {
    if (pts.empty()) throw std::invalid_argument("min_norm_point of an empty set");
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (dot(pts[i], pts[i]) < dot(pts[start], pts[start])) start = i;
    std::vector<std::size_t> sel{start};
    Vector lam{Rational(1)};
    Vector x = pts[start];

    const std::size_t cap = 100000;
    for (std::size_t iter = 0; iter < cap; ++iter) {
        Rational xx = dot(x, x);
        std::size_t j = 0;
        Rational best = dot(x, pts[0]);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            Rational v = dot(x, pts[i]);
            if (v < best) {
                best = v;
                j = i;
            }
        }
        if (best >= xx || std::find(sel.begin(), sel.end(), j) != sel.end()) return {x, sel, lam};
        sel.push_back(j);
        lam.push_back(0);
        while (true) {
            Vector mu = detail::affine_min_norm(pts, sel);
            if (std::all_of(mu.begin(), mu.end(), [](const Rational& v) { return v > 0; })) {
                lam = mu;
                x = detail::combine(pts, sel, lam);
                break;
            }
            Rational theta = 1;
            for (std::size_t i = 0; i < sel.size(); ++i)
                if (mu[i] <= 0 && lam[i] - mu[i] > 0) theta = std::min(theta, Rational(lam[i] / (lam[i] - mu[i])));
            for (std::size_t i = 0; i < sel.size(); ++i) lam[i] += theta * (mu[i] - lam[i]);
            std::vector<std::size_t> keep_sel;
            Vector keep_lam;
            for (std::size_t i = 0; i < sel.size(); ++i)
                if (lam[i] > 0) {
                    keep_sel.push_back(sel[i]);
                    keep_lam.push_back(lam[i]);
                }
            sel = std::move(keep_sel);
            lam = std::move(keep_lam);
            x = detail::combine(pts, sel, lam);
        }
    }
    throw std::logic_error("min_norm_point did not converge");
}

}  // namespace hstab

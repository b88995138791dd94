#pragma once

// Exact two-phase primal simplex with Bland's rule.

#include "hstab/linear_algebra.hpp"
#include "hstab/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hstab {

enum class Sense { LessEq, Equal, GreaterEq };

struct LinearConstraint {
    Vector coeffs;
    Sense sense;
    Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
    std::size_t nvars = 0;
    Vector objective;
    std::vector<LinearConstraint> constraints;

    void add(Vector coeffs, Sense s, Rational rhs) {
        if (coeffs.size() != nvars) throw std::invalid_argument("constraint length mismatch");
        constraints.push_back({std::move(coeffs), s, std::move(rhs)});
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    Vector x;
};

namespace detail {

class Simplex {
public:
    explicit Simplex(const LinearProgram& lp) : n_(lp.nvars) {
        // Normalise to rhs >= 0, then add slack / surplus / artificial columns.
        const std::size_t m = lp.constraints.size();
        std::size_t slack = 0, art = 0;
        std::vector<LinearConstraint> rows = lp.constraints;
        for (auto& c : rows) {
            if (c.rhs < 0) {
                for (auto& v : c.coeffs) v = -v;
                c.rhs = -c.rhs;
                if (c.sense == Sense::LessEq)
                    c.sense = Sense::GreaterEq;
                else if (c.sense == Sense::GreaterEq)
                    c.sense = Sense::LessEq;
            }
            if (c.sense != Sense::Equal) ++slack;
            if (c.sense != Sense::LessEq) ++art;
        }
        slack_begin_ = n_;
        art_begin_ = n_ + slack;
        total_ = n_ + slack + art;
        tab_.assign(m, Vector(total_ + 1, Rational(0)));
        basis_.assign(m, 0);
        std::size_t s = slack_begin_, a = art_begin_;
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t j = 0; j < n_; ++j) tab_[r][j] = rows[r].coeffs[j];
            tab_[r][total_] = rows[r].rhs;
            switch (rows[r].sense) {
                case Sense::LessEq:
                    tab_[r][s] = 1;
                    basis_[r] = s++;
                    break;
                case Sense::GreaterEq:
                    tab_[r][s++] = -1;
                    tab_[r][a] = 1;
                    basis_[r] = a++;
                    break;
                case Sense::Equal:
                    tab_[r][a] = 1;
                    basis_[r] = a++;
                    break;
            }
        }
        objective_ = lp.objective;
    }

    LpResult solve() {
        // Phase 1: maximise -(sum of artificials).
        Vector phase1(total_, Rational(0));
        for (std::size_t j = art_begin_; j < total_; ++j) phase1[j] = -1;
        allowed_ = total_;
        if (!optimise(phase1)) throw std::logic_error("phase 1 cannot be unbounded");
        if (current_value(phase1) != 0) return {LpStatus::Infeasible, 0, {}};
        drive_out_artificials();
        allowed_ = art_begin_;
        Vector obj(total_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) obj[j] = objective_[j];
        if (!optimise(obj)) return {LpStatus::Unbounded, 0, {}};
        LpResult res{LpStatus::Optimal, current_value(obj), Vector(n_, Rational(0))};
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] < n_) res.x[basis_[r]] = tab_[r][total_];
        return res;
    }

private:
    Rational current_value(const Vector& obj) const {
        Rational v = 0;
        for (std::size_t r = 0; r < basis_.size(); ++r) v += obj[basis_[r]] * tab_[r][total_];
        return v;
    }

    void pivot(std::size_t r, std::size_t col) {
        Rational inv = 1 / tab_[r][col];
        for (auto& x : tab_[r]) x *= inv;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == r || tab_[i][col] == 0) continue;
            Rational f = tab_[i][col];
            for (std::size_t j = 0; j <= total_; ++j)
                if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
        }
        basis_[r] = col;
    }

    /// Returns false if unbounded.
    bool optimise(const Vector& obj) {
        while (true) {
            std::vector<bool> in_basis(total_, false);
            for (auto b : basis_) in_basis[b] = true;
            // Bland: smallest index with positive reduced cost.
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed_ && !enter; ++j) {
                if (in_basis[j]) continue;
                Rational rc = obj[j];
                for (std::size_t r = 0; r < basis_.size(); ++r)
                    if (tab_[r][j] != 0) rc -= obj[basis_[r]] * tab_[r][j];
                if (rc > 0) enter = j;
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < tab_.size(); ++r) {
                if (tab_[r][*enter] <= 0) continue;
                Rational ratio = tab_[r][total_] / tab_[r][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if (basis_[r] < art_begin_) continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < art_begin_ && !col; ++j)
                if (tab_[r][j] != 0) col = j;
            if (col) {
                pivot(r, *col);
            } else {
                // Redundant row.
                tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                --r;
            }
        }
    }

    std::size_t n_;
    std::size_t slack_begin_ = 0, art_begin_ = 0, total_ = 0, allowed_ = 0;
    Matrix tab_;
    std::vector<std::size_t> basis_;
    Vector objective_;
};

}  // namespace detail

inline LpResult solve_lp(const LinearProgram& lp) {
    if (lp.objective.size() != lp.nvars) throw std::invalid_argument("objective length mismatch");
    return detail::Simplex(lp).solve();
}

/// Is `target` a convex combination of `points`? Returns the weights if so.
inline std::optional<Vector> convex_combination(const std::vector<Vector>& points, const Vector& target) {
    LinearProgram lp;
    lp.nvars = points.size();
    lp.objective.assign(points.size(), Rational(0));
    for (std::size_t i = 0; i < target.size(); ++i) {
        Vector row(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) row[k] = points[k][i];
        lp.add(std::move(row), Sense::Equal, target[i]);
    }
    lp.add(Vector(points.size(), Rational(1)), Sense::Equal, 1);
    auto res = solve_lp(lp);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    return res.x;
}

}  // namespace hstab

#pragma once

// The degree-m piece I_m of a homogeneous ideal as an exact row space over the degree-m
// monomials. Initial sets for any order are pivot sets of an echelon form, and the reduced rows
// give the inequalities of the corresponding degree-m Groebner cone.

#include "hstab/groebner.hpp"
#include "hstab/linear_algebra.hpp"
#include "hstab/monomial.hpp"
#include "hstab/monomial_order.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace hstab {

struct SliceInitialSet {
    std::vector<std::size_t> columns;                 // sorted indices into DegreeSlice::monomials()
    std::vector<std::vector<std::int64_t>> cone;      // a with a.w > 0 cutting out the open cone
};

class DegreeSlice {
public:
    DegreeSlice(const GroebnerBasis& gb, std::uint32_t m) : nvars_(gb.nvars()), m_(m) {
        monomials_ = monomials_of_degree(nvars_, m);
        for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
        Matrix rows;
        for (const auto& g : gb.ordered_elements()) {
            const auto d = g.front().first.degree();
            if (d > m) continue;
            for (const auto& u : monomials_of_degree(nvars_, static_cast<std::uint32_t>(m - d))) {
                Vector row(monomials_.size(), Rational(0));
                for (const auto& [mono, c] : g) row[index_.at(mono * u)] = c;
                rows.push_back(std::move(row));
            }
        }
        std::vector<std::size_t> cols(monomials_.size());
        std::iota(cols.begin(), cols.end(), 0);
        basis_ = reduced_row_echelon(std::move(rows), cols).rows;
    }

    std::size_t nvars() const { return nvars_; }
    std::uint32_t degree() const { return m_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t dimension() const { return basis_.size(); }
    const Matrix& basis() const { return basis_; }

    std::size_t column_of(const Monomial& mono) const { return index_.at(mono); }

    SliceInitialSet initial_set(const MonomialOrder& order) const {
        std::vector<std::size_t> cols(monomials_.size());
        std::iota(cols.begin(), cols.end(), 0);
        std::sort(cols.begin(), cols.end(),
                  [&](std::size_t a, std::size_t b) { return order.greater(monomials_[a], monomials_[b]); });
        auto ech = reduced_row_echelon(basis_, cols);
        SliceInitialSet out;
        out.columns = ech.pivots;
        std::sort(out.columns.begin(), out.columns.end());
        std::set<std::vector<std::int64_t>> seen;
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            const auto p = ech.pivots[r];
            for (std::size_t q = 0; q < monomials_.size(); ++q) {
                if (q == p || ech.rows[r][q] == 0) continue;
                std::vector<std::int64_t> a(nvars_);
                std::int64_t g = 0;
                for (std::size_t i = 0; i < nvars_; ++i) {
                    a[i] = static_cast<std::int64_t>(monomials_[p][i]) - static_cast<std::int64_t>(monomials_[q][i]);
                    g = std::gcd(g, a[i]);
                }
                if (g > 1)
                    for (auto& x : a) x /= g;
                if (seen.insert(a).second) out.cone.push_back(std::move(a));
            }
        }
        return out;
    }

    /// Exponent sum of the listed columns.
    std::vector<std::int64_t> exponent_sum(const std::vector<std::size_t>& cols) const {
        std::vector<std::int64_t> v(nvars_, 0);
        for (auto c : cols)
            for (std::size_t i = 0; i < nvars_; ++i) v[i] += monomials_[c][i];
        return v;
    }

    /// Rank of I_m restricted to the columns outside `excluded`; equals dimension() exactly
    /// when `excluded` spans the quotient (S/I)_m.
    std::size_t rank_outside(const std::vector<std::size_t>& excluded) const {
        std::vector<bool> drop(monomials_.size(), false);
        for (auto c : excluded) drop.at(c) = true;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < monomials_.size(); ++c)
            if (!drop[c]) cols.push_back(c);
        return reduced_row_echelon(basis_, cols).pivots.size();
    }

private:
    std::size_t nvars_;
    std::uint32_t m_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
    Matrix basis_;
};

}  // namespace hstab

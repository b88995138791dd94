#pragma once

// Degree-m state polytope by traversal of the degree-m Groebner cones.
//
// Vertices are ideal-side: the exponent sum of the degree-m monomials of one initial ideal.
// Starting from the initial ideal of a fixed order, every facet of the current cone is crossed
// by an infinitesimally perturbed order (facet interior point first, inward normal reversed
// second); the search stops when every facet neighbour of every discovered cone is known.

#include "hstab/degree_slice.hpp"
#include "hstab/groebner.hpp"
#include "hstab/lp.hpp"
#include "hstab/monomial_order.hpp"
#include "hstab/one_param_subgroup.hpp"
#include "hstab/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hstab {

struct StatePolytopeOptions {
    std::uint64_t seed = 20100101;
    std::size_t random_restarts = 8;
    std::size_t threads = 1;
};

struct StateCone {
    std::vector<std::int64_t> vertex;
    std::vector<Monomial> initial_monomials;  // degree-m part of the initial ideal
    OneParamSubgroup representative;          // integer weight in the open cone
    std::size_t facets = 0;
};

struct StatePolytope {
    std::uint32_t m = 0;
    std::size_t nvars = 0;
    std::vector<std::vector<std::int64_t>> vertices;  // sorted, deduplicated
    std::vector<StateCone> cones;                     // one per vertex, same order
    std::int64_t coordinate_sum = 0;
    bool certified = false;  // every facet neighbour of every cone was found
};

namespace detail {

/// maximise t subject to a.w >= t for a in cone (a.w = 0 for a = on_facet), -1 <= w_i <= 1, t <= 1.
inline std::optional<std::vector<Rational>> cone_interior_point(const std::vector<std::vector<std::int64_t>>& cone,
                                                                std::size_t n,
                                                                const std::vector<std::int64_t>* on_facet) {
    // Shift w = u - 1 so that all variables are non-negative; a.1 = 0 for every cone normal.
    LinearProgram lp;
    lp.nvars = n + 1;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;
    for (const auto& a : cone) {
        Vector row(n + 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) row[i] = Rational(static_cast<long>(a[i]));
        if (on_facet && a == *on_facet) {
            lp.add(std::move(row), Sense::Equal, 0);
        } else {
            row[n] = -1;
            lp.add(std::move(row), Sense::GreaterEq, 0);
        }
    }
    for (std::size_t i = 0; i <= n; ++i) {
        Vector row(n + 1, Rational(0));
        row[i] = 1;
        lp.add(std::move(row), Sense::LessEq, i < n ? 2 : 1);
    }
    auto res = solve_lp(lp);
    if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = res.x[i] - 1;
    return w;
}

inline std::vector<std::int64_t> to_int64(const std::vector<Integer>& v) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(hstab::to_int64(x));
    return out;
}

}  // namespace detail

inline StatePolytope state_polytope(const Ideal& ideal, std::uint32_t m, const StatePolytopeOptions& opts = {}) {
    if (m < 1) throw std::invalid_argument("degree m must be at least 1");
    const std::size_t n = ideal.nvars();
    const auto start_order = MonomialOrder::graded_revlex();
    const auto gb = buchberger(ideal, start_order);
    const DegreeSlice slice(gb, m);

    // The linear-algebra initial set must reproduce the Groebner one.
    {
        auto from_gb = initial_ideal_degree(gb, m);
        auto from_slice = slice.initial_set(start_order).columns;
        std::vector<std::size_t> cols;
        for (const auto& mono : from_gb) cols.push_back(slice.column_of(mono));
        std::sort(cols.begin(), cols.end());
        if (cols != from_slice) throw std::logic_error("degree slice disagrees with Groebner initial ideal");
    }

    std::vector<MonomialOrder> frontier{start_order};
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    for (std::size_t k = 0; k < opts.random_restarts; ++k) {
        std::vector<std::int64_t> w(n);
        for (auto& x : w) x = dist(rng);
        frontier.push_back(MonomialOrder::weight_matrix({w}, MonomialOrder::TieBreak::Lex, true));
    }

    std::map<std::vector<std::size_t>, StateCone> found;
    std::mutex mu;

    auto process = [&](const MonomialOrder& order, std::vector<MonomialOrder>& next) {
        auto init = slice.initial_set(order);
        {
            std::lock_guard lock(mu);
            if (!found.emplace(init.columns, StateCone{}).second) return;
        }
        // Everything below depends only on the initial set, so the result is thread-count independent.
        StateCone cone;
        cone.vertex = slice.exponent_sum(init.columns);
        for (auto c : init.columns) cone.initial_monomials.push_back(slice.monomials()[c]);
        std::vector<MonomialOrder> neighbours;
        if (init.cone.empty()) {
            cone.representative = OneParamSubgroup(std::vector<std::int64_t>(n, 0));
        } else {
            auto rep = detail::cone_interior_point(init.cone, n, nullptr);
            if (!rep) throw std::logic_error("initial set with an empty Groebner cone");
            cone.representative = OneParamSubgroup(detail::to_int64(primitive_integer_vector(*rep)));
            for (const auto& a : init.cone) {
                auto w0 = detail::cone_interior_point(init.cone, n, &a);
                if (!w0) continue;
                ++cone.facets;
                std::vector<std::int64_t> away(n);
                for (std::size_t i = 0; i < n; ++i) away[i] = -a[i];
                neighbours.push_back(MonomialOrder::weight_matrix(
                    {detail::to_int64(primitive_integer_vector(*w0)), away}, MonomialOrder::TieBreak::Lex, true));
            }
        }
        std::lock_guard lock(mu);
        found[init.columns] = std::move(cone);
        next.insert(next.end(), neighbours.begin(), neighbours.end());
    };

    const std::size_t threads = std::max<std::size_t>(1, opts.threads);
    while (!frontier.empty()) {
        std::vector<MonomialOrder> next;
        if (threads == 1) {
            for (const auto& o : frontier) process(o, next);
        } else {
            std::vector<std::thread> pool;
            std::size_t cursor = 0;
            std::mutex cursor_mu;
            std::exception_ptr failure;
            for (std::size_t t = 0; t < threads; ++t) {
                pool.emplace_back([&] {
                    while (true) {
                        std::size_t k;
                        {
                            std::lock_guard lock(cursor_mu);
                            if (cursor >= frontier.size() || failure) return;
                            k = cursor++;
                        }
                        try {
                            process(frontier[k], next);
                        } catch (...) {
                            std::lock_guard lock(cursor_mu);
                            failure = std::current_exception();
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
            if (failure) std::rethrow_exception(failure);
        }
        frontier = std::move(next);
    }

    StatePolytope out;
    out.m = m;
    out.nvars = n;
    out.certified = true;
    std::vector<StateCone> cones;
    for (auto& [key, cone] : found) cones.push_back(std::move(cone));
    std::sort(cones.begin(), cones.end(), [](const StateCone& a, const StateCone& b) { return a.vertex < b.vertex; });

    // Exact convex-position filter.
    std::vector<Vector> pts;
    for (const auto& c : cones) {
        Vector v;
        for (auto x : c.vertex) v.emplace_back(static_cast<long>(x));
        pts.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < cones.size(); ++k) {
        if (k > 0 && cones[k].vertex == cones[k - 1].vertex) continue;
        std::vector<Vector> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != k && cones[j].vertex != cones[k].vertex) others.push_back(pts[j]);
        if (!others.empty() && convex_combination(others, pts[k])) continue;
        out.vertices.push_back(cones[k].vertex);
        out.cones.push_back(cones[k]);
    }
    if (!out.vertices.empty())
        for (auto x : out.vertices.front()) out.coordinate_sum += x;
    return out;
}

}  // namespace hstab

#pragma once

// Buchberger's algorithm with the Gebauer-Moeller criteria, reduced Groebner bases,
// initial ideals in a fixed degree and standard monomials.

#include "hstab/monomial.hpp"
#include "hstab/monomial_order.hpp"
#include "hstab/one_param_subgroup.hpp"
#include "hstab/polynomial.hpp"
#include "hstab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hstab {

using Term = std::pair<Monomial, Rational>;

/// Terms sorted strictly descending in a fixed monomial order.
using OrderedPoly = std::vector<Term>;

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
    OrderedPoly out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
    return out;
}

inline Polynomial to_polynomial(const OrderedPoly& p, std::size_t nvars) {
    Polynomial out(nvars);
    for (const auto& [m, c] : p) out.add_term(m, c);
    return out;
}

namespace detail {

/// Returns p[from..] - c * u * g, merged in order; cancelled terms dropped.
inline OrderedPoly sub_multiple(const OrderedPoly& p, std::size_t from, const Rational& c, const Monomial& u,
                                const OrderedPoly& g, const MonomialOrder& order) {
    OrderedPoly out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(p[i++]);
            continue;
        }
        Monomial gm = g[j].first * u;
        if (i == p.size()) {
            out.emplace_back(std::move(gm), -c * g[j].second);
            ++j;
            continue;
        }
        int cmp = order.compare(p[i].first, gm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.emplace_back(std::move(gm), -c * g[j].second);
            ++j;
        } else {
            Rational v = p[i].second - c * g[j].second;
            if (v != 0) out.emplace_back(p[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

inline void make_monic(OrderedPoly& p) {
    if (p.empty() || p.front().second == 1) return;
    Rational inv = 1 / p.front().second;
    for (auto& t : p) t.second *= inv;
}

/// Full reduction of f modulo the polynomials indexed by `active` (all monic).
inline OrderedPoly normal_form(OrderedPoly f, const std::vector<OrderedPoly>& polys,
                               const std::vector<std::size_t>& active, const MonomialOrder& order) {
    OrderedPoly rem;
    std::size_t i = 0;
    while (i < f.size()) {
        const Monomial& lead = f[i].first;
        const OrderedPoly* divisor = nullptr;
        for (std::size_t k : active) {
            if (polys[k].front().first.divides(lead)) {
                divisor = &polys[k];
                break;
            }
        }
        if (!divisor) {
            rem.push_back(std::move(f[i]));
            ++i;
            continue;
        }
        Monomial u = lead / divisor->front().first;
        Rational c = f[i].second;
        f = sub_multiple(f, i, c, u, *divisor, order);
        i = 0;
    }
    return rem;
}

inline OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
    Monomial l = lcm(f.front().first, g.front().first);
    Monomial uf = l / f.front().first;
    Monomial ug = l / g.front().first;
    OrderedPoly a;
    a.reserve(f.size());
    Rational cf = 1 / f.front().second;
    for (const auto& [m, c] : f) a.emplace_back(m * uf, c * cf);
    Rational cg = 1 / g.front().second;
    return sub_multiple(a, 0, cg, ug, g, order);
}

class Buchberger {
public:
    Buchberger(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(std::move(order)) {}

    std::vector<OrderedPoly> run(const std::vector<Polynomial>& generators) {
        for (const auto& g : generators) {
            if (g.nvars() != nvars_) throw std::invalid_argument("generator lives in a different ring");
            auto h = normal_form(to_ordered(g, order_), polys_, active_, order_);
            if (h.empty()) continue;
            make_monic(h);
            add(std::move(h));
        }
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                int cmp = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
                if (cmp < 0 || (cmp == 0 && std::pair(pairs_[k].i, pairs_[k].j) < std::pair(pairs_[best].i, pairs_[best].j)))
                    best = k;
            }
            Pair p = std::move(pairs_[best]);
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            auto h = normal_form(s_polynomial(polys_[p.i], polys_[p.j], order_), polys_, active_, order_);
            if (h.empty()) continue;
            make_monic(h);
            add(std::move(h));
        }
        return reduce_basis();
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    const Monomial& lm(std::size_t k) const { return polys_[k].front().first; }

    // Gebauer-Moeller update.
    void add(OrderedPoly h_poly) {
        polys_.push_back(std::move(h_poly));
        const std::size_t h = polys_.size() - 1;
        const Monomial& lh = lm(h);

        std::vector<std::size_t> candidates = active_;
        std::vector<Monomial> cand_lcm;
        for (std::size_t g : candidates) cand_lcm.push_back(lcm(lh, lm(g)));
        std::vector<std::size_t> kept;
        std::vector<Monomial> kept_lcm;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            bool keep = coprime(lh, lm(candidates[a]));
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
                    if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
                for (std::size_t b = 0; b < kept.size() && keep; ++b)
                    if (kept_lcm[b].divides(cand_lcm[a])) keep = false;
            }
            if (keep) {
                kept.push_back(candidates[a]);
                kept_lcm.push_back(cand_lcm[a]);
            }
        }

        std::vector<Pair> next;
        next.reserve(pairs_.size() + kept.size());
        for (auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && lcm(lm(p.i), lh) != p.lcm && lcm(lh, lm(p.j)) != p.lcm;
            if (!drop) next.push_back(std::move(p));
        }
        for (std::size_t a = 0; a < kept.size(); ++a)
            if (!coprime(lh, lm(kept[a]))) next.push_back(Pair{kept[a], h, kept_lcm[a]});
        pairs_ = std::move(next);

        std::vector<std::size_t> still;
        for (std::size_t g : active_)
            if (!lh.divides(lm(g))) still.push_back(g);
        still.push_back(h);
        active_ = std::move(still);
    }

    std::vector<OrderedPoly> reduce_basis() {
        // Minimal basis: drop elements whose leading monomial another one divides.
        std::vector<std::size_t> minimal;
        for (std::size_t a : active_) {
            bool redundant = false;
            for (std::size_t b : active_)
                if (a != b && lm(b).divides(lm(a)) && (lm(a) != lm(b) || b < a)) redundant = true;
            if (!redundant) minimal.push_back(a);
        }
        std::vector<OrderedPoly> out;
        for (std::size_t a : minimal) {
            std::vector<std::size_t> others;
            for (std::size_t b : minimal)
                if (b != a) others.push_back(b);
            OrderedPoly tail(polys_[a].begin() + 1, polys_[a].end());
            OrderedPoly r{polys_[a].front()};
            auto red = normal_form(std::move(tail), polys_, others, order_);
            r.insert(r.end(), red.begin(), red.end());
            make_monic(r);
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [&](const OrderedPoly& a, const OrderedPoly& b) { return order_.greater(a.front().first, b.front().first); });
        return out;
    }

    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<OrderedPoly> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of an ideal with respect to a fixed order.
/// Elements are monic and sorted by descending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<OrderedPoly> elements)
        : nvars_(nvars), order_(std::move(order)), elements_(std::move(elements)) {
        for (std::size_t k = 0; k < elements_.size(); ++k) all_.push_back(k);
    }

    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t size() const { return elements_.size(); }
    bool is_zero_ideal() const { return elements_.empty(); }
    bool is_unit_ideal() const { return elements_.size() == 1 && elements_.front().front().first.is_one(); }

    const std::vector<OrderedPoly>& ordered_elements() const { return elements_; }

    std::vector<Polynomial> elements() const {
        std::vector<Polynomial> out;
        for (const auto& e : elements_) out.push_back(to_polynomial(e, nvars_));
        return out;
    }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& e : elements_) out.push_back(e.front().first);
        return out;
    }

    bool in_initial_ideal(const Monomial& m) const {
        for (const auto& e : elements_)
            if (e.front().first.divides(m)) return true;
        return false;
    }

    Polynomial normal_form(const Polynomial& f) const {
        return to_polynomial(detail::normal_form(to_ordered(f, order_), elements_, all_, order_), nvars_);
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

private:
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<OrderedPoly> elements_;
    std::vector<std::size_t> all_;
};

/// Groebner basis of generators that are homogeneous for `grading` (an arbitrary positive
/// grading; the standard one unless the caller is eliminating variables).
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                                const std::vector<std::int64_t>& grading) {
    if (generators.empty()) throw std::invalid_argument("buchberger needs the ring size; pass an Ideal");
    const std::size_t n = generators.front().nvars();
    if (n == 0) throw std::invalid_argument("ring without variables");
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (generators[k].nvars() != n) throw std::invalid_argument("generators live in different rings");
        if (!generators[k].is_homogeneous(grading))
            throw std::invalid_argument("generator " + std::to_string(k) + " is not homogeneous");
    }
    return GroebnerBasis(n, order, detail::Buchberger(n, order).run(generators));
}

/// Reduced Groebner basis of a homogeneous ideal. Throws std::invalid_argument naming the
/// index of the first non-homogeneous generator.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
    const std::size_t n = ideal.nvars();
    if (n == 0) throw std::invalid_argument("ring without variables");
    for (std::size_t k = 0; k < ideal.generators.size(); ++k) {
        if (ideal.generators[k].nvars() != n) throw std::invalid_argument("generator " + std::to_string(k) + " has the wrong ring");
        if (!ideal.generators[k].is_homogeneous())
            throw std::invalid_argument("generator " + std::to_string(k) + " is not homogeneous");
    }
    return GroebnerBasis(n, order, detail::Buchberger(n, order).run(ideal.generators));
}

/// True if every S-polynomial of basis pairs reduces to zero (Buchberger's criterion).
inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& el = gb.ordered_elements();
    std::vector<std::size_t> all(el.size());
    for (std::size_t k = 0; k < el.size(); ++k) all[k] = k;
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (!detail::normal_form(detail::s_polynomial(el[i], el[j], gb.order()), el, all, gb.order()).empty())
                return false;
    return true;
}

/// Monic, leading monomials pairwise non-dividing, no trailing term divisible by a leading one.
inline bool is_reduced(const GroebnerBasis& gb) {
    const auto& el = gb.ordered_elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (el[i].empty() || el[i].front().second != 1) return false;
        for (std::size_t j = 0; j < el.size(); ++j) {
            for (std::size_t t = 0; t < el[j].size(); ++t) {
                if (i == j && t == 0) continue;
                if (el[i].front().first.divides(el[j][t].first)) return false;
            }
        }
    }
    return true;
}

/// Degree-m monomials lying in in(I).
inline std::vector<Monomial> initial_ideal_degree(const GroebnerBasis& gb, std::uint32_t m) {
    std::vector<Monomial> out;
    for (auto& mono : monomials_of_degree(gb.nvars(), m))
        if (gb.in_initial_ideal(mono)) out.push_back(std::move(mono));
    return out;
}

/// Degree-m monomials outside in(I); a basis of (S/I)_m.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint32_t m) {
    std::vector<Monomial> out;
    for (auto& mono : monomials_of_degree(gb.nvars(), m))
        if (!gb.in_initial_ideal(mono)) out.push_back(std::move(mono));
    return out;
}

inline Integer standard_monomial_weight_sum(const GroebnerBasis& gb, std::uint32_t m, const OneParamSubgroup& rho) {
    if (rho.size() != gb.nvars()) throw std::invalid_argument("weight vector length does not match ring");
    Integer s = 0;
    for (const auto& mono : standard_monomials(gb, m)) s += Integer(static_cast<long>(weight_of(mono, rho)));
    return s;
}

}  // namespace hstab

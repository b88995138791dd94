#pragma once

#include "oracles.hpp"

#include "hstab/curves.hpp"
#include "hstab/polynomial.hpp"

#include <random>
#include <set>
#include <vector>

namespace support {

inline std::vector<oracle::Poly> generators(const hstab::Ideal& I) {
    std::vector<oracle::Poly> out;
    for (const auto& g : I.generators) {
        oracle::Poly p;
        for (const auto& [m, c] : g.terms()) p[oracle::Exp(m.exponents().begin(), m.exponents().end())] = c;
        if (!p.empty()) out.push_back(std::move(p));
    }
    return out;
}

inline hstab::Monomial mono(const oracle::Exp& e) {
    return hstab::Monomial(std::vector<hstab::Monomial::Exponent>(e.begin(), e.end()));
}

inline std::set<oracle::Exp> exps(const std::vector<hstab::Monomial>& ms) {
    std::set<oracle::Exp> s;
    for (const auto& m : ms) s.insert(oracle::Exp(m.exponents().begin(), m.exponents().end()));
    return s;
}

inline hstab::Polynomial random_poly(std::mt19937_64& rng, std::size_t n, int max_deg, int terms) {
    std::uniform_int_distribution<int> e(0, max_deg), c(-9, 9), d(1, 4);
    hstab::Polynomial p(n);
    for (int k = 0; k < terms; ++k) {
        std::vector<hstab::Monomial::Exponent> ex(n);
        for (auto& x : ex) x = static_cast<hstab::Monomial::Exponent>(e(rng));
        {
            hstab::Rational r(c(rng), d(rng));
            r.canonicalize();
            p.add_term(hstab::Monomial(ex), r);
        }
    }
    return p;
}

inline hstab::Polynomial random_form(std::mt19937_64& rng, std::size_t n, int deg, int terms) {
    std::uniform_int_distribution<int> c(-5, 5);
    auto all = oracle::monomials(static_cast<int>(n), deg);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    hstab::Polynomial p(n);
    for (int k = 0; k < terms; ++k) p.add_term(mono(all[pick(rng)]), hstab::Rational(c(rng)));
    return p;
}

/// The ten vertices printed for the bicuspidal curve at m = 2.
inline std::set<std::vector<std::int64_t>> bicuspidal_vertices() {
    return {{1, 3, 0, 3, 1}, {1, 4, 0, 1, 2}, {2, 1, 0, 4, 1}, {2, 2, 0, 2, 2}, {1, 1, 2, 4, 0},
            {2, 0, 2, 3, 1}, {2, 1, 2, 1, 2}, {0, 3, 2, 3, 0}, {0, 4, 2, 1, 1}, {1, 3, 2, 0, 2}};
}

}  // namespace support

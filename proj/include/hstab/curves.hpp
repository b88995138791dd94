#pragma once

// Monomial curves in projective space and the catalogue of worked examples.

#include "hstab/groebner.hpp"
#include "hstab/hilbert.hpp"
#include "hstab/monomial_order.hpp"
#include "hstab/one_param_subgroup.hpp"
#include "hstab/polynomial.hpp"
#include "hstab/stability.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hstab {

/// x_i -> s^{a_i} t^{b_i} with a_i + b_i = d.
struct MonomialCurveSpec {
    std::uint32_t d = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::string> labels;  // empty: x0, x1, ...

    Ring ring() const { return labels.empty() ? Ring::standard(pairs.size()) : Ring(labels); }

    void validate() const {
        if (d < 1) throw std::invalid_argument("curve degree d must be at least 1");
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (const auto& [a, b] : pairs) {
            if (a + b != d)
                throw std::invalid_argument("pair (" + std::to_string(a) + ", " + std::to_string(b) + ") does not sum to d = " +
                                            std::to_string(d));
            if (!seen.insert({a, b}).second)
                throw std::invalid_argument("repeated pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
        if (pairs.size() < 2) throw std::invalid_argument("degenerate curve spec: fewer than 2 distinct pairs");
        if (!labels.empty() && labels.size() != pairs.size()) throw std::invalid_argument("label count does not match pairs");
    }
};

/// Homogeneous ideal of the parameterised curve, by eliminating s and t from x_i - s^{a_i} t^{b_i}.
/// Returned generators are the reduced grevlex Groebner basis.
inline Ideal lattice_ideal(const MonomialCurveSpec& spec) {
    spec.validate();
    const std::size_t k = spec.pairs.size();
    const std::size_t n = k + 2;  // x_0..x_{k-1}, s, t
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial g(Monomial::variable(n, i), 1);
        std::vector<Monomial::Exponent> e(n, 0);
        e[k] = spec.pairs[i].first;
        e[k + 1] = spec.pairs[i].second;
        g.add_term(Monomial(e), -1);
        gens.push_back(std::move(g));
    }
    std::vector<std::int64_t> grading(n, spec.d), elim(n, 0);
    grading[k] = grading[k + 1] = 1;
    elim[k] = elim[k + 1] = 1;
    const auto order = MonomialOrder::weight_matrix({elim, grading}, MonomialOrder::TieBreak::RevLex, false);
    const auto gb = buchberger(gens, order, grading);

    Ideal out{spec.ring(), {}};
    for (const auto& g : gb.elements()) {
        bool free_of_st = true;
        for (const auto& [m, c] : g.terms())
            if (m[k] || m[k + 1]) free_of_st = false;
        if (!free_of_st) continue;
        Polynomial h(k);
        for (const auto& [m, c] : g.terms()) {
            std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(k));
            h.add_term(Monomial(std::move(e)), c);
        }
        out.generators.push_back(std::move(h));
    }
    out.generators = buchberger(out, MonomialOrder::graded_revlex()).elements();
    return out;
}

struct TailCurve {
    std::uint32_t b = 0;
    MonomialCurveSpec spec;
    OneParamSubgroup rho;  // weight of x_i = t-exponent of its parameterising monomial
};

/// Rational genus-b tail with a monomial A_{2b} cusp: t-exponents {0,2,...,2b} u {2b+1,...,4b-2}.
inline TailCurve tail_curve_spec(std::uint32_t b) {
    if (b < 2) throw std::invalid_argument("tail genus b must be at least 2");
    TailCurve out;
    out.b = b;
    out.spec.d = 4 * b - 2;
    std::vector<std::int64_t> w;
    auto add = [&](std::uint32_t i) {
        out.spec.pairs.emplace_back(4 * b - 2 - i, i);
        w.push_back(i);
    };
    for (std::uint32_t i = 0; i <= 2 * b; i += 2) add(i);
    for (std::uint32_t i = 2 * b + 1; i <= 4 * b - 2; ++i) add(i);
    out.rho = OneParamSubgroup(w);
    return out;
}

/// P_R(m) = (4b - 2) m + 1 - b
inline HilbertPolynomial tail_hilbert_polynomial(std::uint32_t b) { return hilbert_polynomial_of_curve(4 * b - 2, b); }

/// Standard-monomial weight sums w_R(m), m = 1..m_max, of the tail curve under the
/// rho-weighted graded-lex order.
inline std::vector<Integer> tail_weight_sums(std::uint32_t b, std::uint32_t m_max) {
    const auto tail = tail_curve_spec(b);
    const auto ideal = lattice_ideal(tail.spec);
    const auto gb = buchberger(ideal, MonomialOrder::weighted(tail.rho, MonomialOrder::graded_lex()));
    std::vector<Integer> out;
    for (std::uint32_t m = 1; m <= m_max; ++m) out.push_back(standard_monomial_weight_sum(gb, m, tail.rho));
    return out;
}

inline Integer tail_weight_sum(std::uint32_t b, std::uint32_t m) { return tail_weight_sums(b, m).back(); }

// ---------------------------------------------------------------------------------------------
// Catalogue

struct NamedExample {
    std::string name;
    Ideal ideal;
    HilbertPolynomial hilbert_polynomial;
    std::optional<KempfHypothesis> stabilizer;
    std::optional<OneParamSubgroup> distinguished_rho;
    std::string expectation;
};

inline std::vector<std::string> example_names() {
    return {"bicuspidal-g2-tricanonical", "a2b-tail:<b>", "thickened-line:<N>:<r>"};
}

namespace detail {

inline std::vector<std::uint32_t> numeric_fields(std::string_view rest, std::size_t count, const std::string& name) {
    std::vector<std::uint32_t> out;
    std::string item;
    std::stringstream ss{std::string(rest)};
    while (std::getline(ss, item, ':')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad parameter '" + item + "' in example '" + name + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (out.size() != count) throw std::invalid_argument("example '" + name + "' expects " + std::to_string(count) + " parameters");
    return out;
}

}  // namespace detail

/// Bicuspidal tri-canonical genus-2 rational curve in P^4: the image of [s^6, s^4t^2, s^3t^3, s^2t^4, t^6].
inline Ideal bicuspidal_ideal() {
    Ring r = Ring::standard(5);
    return Ideal{r,
                 {parse_polynomial("x3^2 - x1*x4", r), parse_polynomial("x1*x3 - x0*x4", r),
                  parse_polynomial("x2^2 - x0*x4", r), parse_polynomial("x1^2 - x0*x3", r)}};
}

/// <x0^r> in P^N
inline Ideal thickened_hyperplane_ideal(std::uint32_t n, std::uint32_t r) {
    if (n < 1 || r < 1) throw std::invalid_argument("thickened-line needs N >= 1 and r >= 1");
    Ring ring = Ring::standard(n + 1);
    return Ideal{ring, {Polynomial(Monomial::variable(n + 1, 0, r), 1)}};
}

inline NamedExample named_example(const std::string& name) {
    const std::string tail_prefix = "a2b-tail:";
    const std::string thick_prefix = "thickened-line:";
    if (name == "bicuspidal-g2-tricanonical") {
        NamedExample ex;
        ex.name = name;
        ex.ideal = bicuspidal_ideal();
        ex.hilbert_polynomial = hilbert_polynomial_of_curve(6, 2);
        ex.stabilizer = KempfHypothesis{{6, 4, 3, 2, 0}};
        ex.distinguished_rho = OneParamSubgroup{6, 4, 3, 2, 0};
        ex.expectation = "2-semistable";
        return ex;
    }
    if (name.rfind(tail_prefix, 0) == 0) {
        auto b = detail::numeric_fields(std::string_view(name).substr(tail_prefix.size()), 1, name)[0];
        auto tail = tail_curve_spec(b);
        NamedExample ex;
        ex.name = name;
        ex.ideal = lattice_ideal(tail.spec);
        ex.hilbert_polynomial = tail_hilbert_polynomial(b);
        ex.stabilizer = KempfHypothesis{tail.rho.weights()};
        ex.distinguished_rho = tail.rho;
        const std::int64_t bb = b;
        ex.expectation = "w_R(m) = " + std::to_string(8 * bb * bb - 8 * bb + 2) + "m^2 + " + std::to_string(2 * bb - 1) +
                         "m - " + std::to_string(bb * bb);
        return ex;
    }
    if (name.rfind(thick_prefix, 0) == 0) {
        auto f = detail::numeric_fields(std::string_view(name).substr(thick_prefix.size()), 2, name);
        const auto n = f[0], r = f[1];
        NamedExample ex;
        ex.name = name;
        ex.ideal = thickened_hyperplane_ideal(n, r);
        // sum_{a < r} C(m - a + N - 1, N - 1)
        HilbertPolynomial p;
        for (std::uint32_t a = 0; a < r; ++a)
            p = p + HilbertPolynomial::binomial_in(static_cast<std::int64_t>(n) - 1 - a, n - 1);
        ex.hilbert_polynomial = p;
        std::vector<std::int64_t> w(n + 1, 1);
        w[0] = 0;
        ex.distinguished_rho = OneParamSubgroup(w);
        ex.expectation = "unstable for m > " + std::to_string(static_cast<std::int64_t>(n + 1) * (static_cast<std::int64_t>(r) - 1));
        return ex;
    }
    throw std::invalid_argument("unknown example '" + name + "'");
}

// ---------------------------------------------------------------------------------------------
// Curve spec files: "d: <int>" then lines "pair: <a> <b>"; '#' starts a comment.

inline MonomialCurveSpec parse_curve_spec(std::string_view text) {
    MonomialCurveSpec spec;
    bool have_d = false;
    std::size_t lineno = 0;
    std::stringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'd:' or 'pair:'", lineno, first + 1);
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::stringstream fields(line.substr(colon + 1));
        auto read_nat = [&](const char* what) {
            long long v = -1;
            if (!(fields >> v) || v < 0)
                throw ParseError(std::string("expected a non-negative integer for ") + what, lineno, colon + 2);
            return static_cast<std::uint32_t>(v);
        };
        if (key == "d") {
            if (have_d) throw ParseError("duplicate 'd:' line", lineno, first + 1);
            if (!spec.pairs.empty()) throw ParseError("'d:' must come before the pairs", lineno, first + 1);
            spec.d = read_nat("d");
            have_d = true;
        } else if (key == "pair") {
            if (!have_d) throw ParseError("'pair:' before 'd:'", lineno, first + 1);
            auto a = read_nat("a");
            auto b = read_nat("b");
            spec.pairs.emplace_back(a, b);
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, first + 1);
        }
        std::string junk;
        if (fields >> junk) throw ParseError("trailing text '" + junk + "'", lineno, colon + 2);
    }
    if (!have_d) throw ParseError("missing 'd:' line", lineno + 1, 1);
    spec.validate();
    return spec;
}

}  // namespace hstab

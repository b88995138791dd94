#pragma once

// Divisor-class arithmetic in the basis (lambda, delta), the alpha <-> m dictionary for
// bicanonical Hilbert points, cuspidal-tail indices and characters, and chamber bookkeeping
// for one-parameter actions on deformation spaces.

#include "hstab/polynomial.hpp"
#include "hstab/rational.hpp"
#include "hstab/stability.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hstab {

/// a * lambda + b * delta. Compared up to positive rational scaling.
struct DivisorClass {
    Rational lambda;
    Rational delta;

    /// lambda / (-delta); none when delta = 0.
    std::optional<Rational> slope() const {
        if (delta == 0) return std::nullopt;
        return lambda / -delta;
    }

    /// alpha with the class proportional to 13 lambda - (2 - alpha) delta.
    std::optional<Rational> alpha() const {
        if (lambda == 0) return std::nullopt;
        return 2 + Rational(13) * delta / lambda;
    }

    /// Scaled by a positive factor so that delta = -1 (or +1), or lambda = +-1 if delta = 0.
    DivisorClass normalized() const {
        Rational s = delta != 0 ? abs(delta) : abs(lambda);
        if (s == 0) return *this;
        return {lambda / s, delta / s};
    }

    friend bool projectively_equal(const DivisorClass& a, const DivisorClass& b) {
        return a.lambda * b.delta == a.delta * b.lambda && a.lambda * b.lambda + a.delta * b.delta > 0;
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline std::string to_string(const DivisorClass& c) {
    Ring r({"lambda", "delta"});
    Polynomial p(2);
    p.add_term(Monomial({1, 0}), c.lambda);
    p.add_term(Monomial({0, 1}), c.delta);
    return to_string(p, r);
}

/// Pullback of O(1) under the m-th Hilbert embedding of n-canonical curves, up to positive scale.
inline DivisorClass linearization_class(const Rational& m, std::int64_t n, std::int64_t g) {
    if (m <= 0) throw std::invalid_argument("m must be positive");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const Rational gg(static_cast<long>(g)), nn(static_cast<long>(n));
    if (n == 1) {
        // lambda + (m-1) [((4g+2)m - g + 1) lambda - (g m / 2) delta]
        return {1 + (m - 1) * ((4 * gg + 2) * m - gg + 1), -(m - 1) * gg * m / 2};
    }
    return {6 * m * nn * nn - 2 * m * nn - 2 * nn + 1, -m * nn * nn / 2};
}

/// Canonical polarisation of the Chow variety of n-canonical curves, up to positive scale.
inline DivisorClass chow_class(std::int64_t n, std::int64_t g) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const Rational gg(static_cast<long>(g)), nn(static_cast<long>(n));
    if (n == 1) return {4 * gg + 2, -gg / 2};
    return {6 * nn - 2, -nn / 2};
}

/// alpha(m) = (14m - 6) / (20m - 3)
inline Rational alpha_of_m(const Rational& m) {
    Rational den = 20 * m - 3;
    if (den == 0) throw std::domain_error("alpha(m) has a pole at m = 3/20");
    return (14 * m - 6) / den;
}

/// m(alpha) = 3 (2 - alpha) / (2 (7 - 10 alpha))
inline Rational m_of_alpha(const Rational& alpha) {
    Rational den = 2 * (7 - 10 * alpha);
    if (den == 0) throw std::domain_error("m(alpha) has a pole at alpha = 7/10");
    return 3 * (2 - alpha) / den;
}

// ---------------------------------------------------------------------------------------------
// Cuspidal tails

struct TailParams {
    std::int64_t g = 0;  // genus of C = D u R
    std::int64_t b = 0;  // genus of the tail R
    Rational m;

    void validate(bool need_g) const {
        if (b < 2) throw std::invalid_argument("tail genus b must be at least 2");
        if (need_g && g <= b) throw std::invalid_argument("need g > b so that D has positive genus");
        if (m <= 0) throw std::invalid_argument("m must be positive");
    }
};

struct TailIndex {
    Rational value;
    Verdict verdict = Verdict::StrictlySemistable;
    Rational threshold;  // 3b^2 / (4b^2 - 8b + 2): unstable for 1 < m < threshold
};

/// (1/3)(m - 1)((4b^2 - 8b + 2) m - 3 b^2)
inline TailIndex tail_index_closed_form(std::int64_t b, const Rational& m) {
    TailParams{b + 1, b, m}.validate(false);
    const Rational bb(static_cast<long>(b));
    TailIndex out;
    out.value = (m - 1) * ((4 * bb * bb - 8 * bb + 2) * m - 3 * bb * bb) / 3;
    out.verdict = verdict_of(out.value);
    out.threshold = 3 * bb * bb / (4 * bb * bb - 8 * bb + 2);
    return out;
}

/// (4b - 2) m ((4m - 1)(g - b - 1) + 2m - 1): D carries constant weight 4b - 2.
inline Rational tail_complement_weight(std::int64_t b, std::int64_t g, const Rational& m) {
    const Rational bb(static_cast<long>(b)), gg(static_cast<long>(g));
    return (4 * bb - 2) * m * ((4 * m - 1) * (gg - bb - 1) + 2 * m - 1);
}

struct TailIndexAssembly {
    Rational weight_total;   // r = C(4b-1, 2) - b^2 + (4b-2)(3g-3b-2)
    std::int64_t ambient = 0;  // N + 1 = 3g - 3
    Rational p_value;        // P(m) = (4g - 4) m + 1 - g
    Rational average;        // m P(m) r / (N + 1)
    Integer tail_weight;     // w_R(m), supplied
    Rational complement_weight;  // w_D(m)
    Rational index;
};

class TailAssemblyMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// mu = m P(m) r / (N+1) - w_R(m) - w_D(m) for a bicanonical C = D u R. Throws
/// TailAssemblyMismatch when the result disagrees with tail_index_closed_form.
inline TailIndexAssembly tail_index_assembled(const TailParams& p, const Integer& w_r) {
    p.validate(true);
    if (!is_integer(p.m)) throw std::domain_error("the assembled tail index needs an integer m");
    const Rational bb(static_cast<long>(p.b)), gg(static_cast<long>(p.g));
    TailIndexAssembly a;
    a.weight_total = (4 * bb - 1) * (4 * bb - 2) / 2 - bb * bb + (4 * bb - 2) * (3 * gg - 3 * bb - 2);
    a.ambient = 3 * p.g - 3;
    a.p_value = (4 * gg - 4) * p.m + 1 - gg;
    a.average = p.m * a.p_value * a.weight_total / Rational(static_cast<long>(a.ambient));
    a.tail_weight = w_r;
    a.complement_weight = tail_complement_weight(p.b, p.g, p.m);
    a.index = a.average - Rational(w_r) - a.complement_weight;
    auto closed = tail_index_closed_form(p.b, p.m).value;
    if (a.index != closed)
        throw TailAssemblyMismatch("assembled tail index " + to_string(a.index) + " != closed form " + to_string(closed) +
                                   " (b=" + std::to_string(p.b) + ", g=" + std::to_string(p.g) + ", m=" + to_string(p.m) + ")");
    return a;
}

// ---------------------------------------------------------------------------------------------
// Characters

class CharacterTable {
public:
    /// Enforces chi_K = 13 chi_lambda - 2 chi_delta and chi_lambda2 = 13 chi_lambda - chi_delta.
    CharacterTable(Integer lambda, Integer lambda2, Integer delta, Integer k)
        : lambda_(std::move(lambda)), lambda2_(std::move(lambda2)), delta_(std::move(delta)), k_(std::move(k)) {
        if (k_ != 13 * lambda_ - 2 * delta_) throw std::logic_error("character table violates K = 13 lambda - 2 delta");
        if (lambda2_ != 13 * lambda_ - delta_) throw std::logic_error("character table violates lambda_2 = 13 lambda - delta");
    }

    const Integer& lambda() const { return lambda_; }
    const Integer& lambda2() const { return lambda2_; }
    const Integer& delta() const { return delta_; }
    const Integer& canonical() const { return k_; }

private:
    Integer lambda_, lambda2_, delta_, k_;
};

/// Characters of the G_m automorphisms of a curve with a nodally attached monomial A_{2b} tail.
inline CharacterTable tail_characters(std::int64_t b) {
    if (b < 2) throw std::invalid_argument("tail genus b must be at least 2");
    const Integer bb(static_cast<long>(b));
    return CharacterTable(bb * bb, 5 * bb * bb - 4 * bb + 1, 8 * bb * bb + 4 * bb - 1, -3 * bb * bb - 8 * bb + 2);
}

// ---------------------------------------------------------------------------------------------
// Chambers of a G_m action on a deformation space

struct DeformationChart {
    std::vector<std::pair<std::string, std::int64_t>> coordinates;
};

struct ChamberDecomposition {
    std::vector<std::string> negative_complement;  // T \ T^- = V(negative-weight coordinates)
    std::vector<std::string> positive_complement;  // T \ T^+ = V(positive-weight coordinates)
    std::vector<std::string> attracted;            // weight >= 0: inside the basin of attraction
    std::vector<std::string> fixed_tangent;        // weight = 0 (reported separately)
};

inline ChamberDecomposition chamber_decomposition(const DeformationChart& chart) {
    ChamberDecomposition out;
    for (const auto& [name, w] : chart.coordinates) {
        if (w < 0) out.negative_complement.push_back(name);
        if (w > 0) out.positive_complement.push_back(name);
        if (w >= 0) out.attracted.push_back(name);
        if (w == 0) out.fixed_tangent.push_back(name);
    }
    return out;
}

/// Tacnode meeting two nodes: s_i -> a^{-4+i} s_i, n_i -> a n_i.
inline DeformationChart tacnode_chart() {
    return {{{"s0", -4}, {"s1", -3}, {"s2", -2}, {"n1", 1}, {"n2", 1}}};
}

/// Versal deformation of a monomial A_{2b} cusp (c_i of weight 4b + 2 - 2i) plus the node of weight -1.
inline DeformationChart cusp_tail_chart(std::int64_t b) {
    if (b < 2) throw std::invalid_argument("tail genus b must be at least 2");
    DeformationChart c;
    for (std::int64_t i = 0; i <= 2 * b - 1; ++i) c.coordinates.emplace_back("c" + std::to_string(i), 4 * b + 2 - 2 * i);
    c.coordinates.emplace_back("node", -1);
    return c;
}

/// Lines "coord <name> weight <int>"; '#' starts a comment.
inline DeformationChart parse_chart(std::string_view text) {
    DeformationChart chart;
    std::stringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::stringstream fields(line);
        std::string kw;
        if (!(fields >> kw)) continue;
        const auto col = line.find(kw) + 1;
        if (kw != "coord") throw ParseError("expected 'coord'", lineno, col);
        std::string name, wkw;
        long long w = 0;
        if (!(fields >> name)) throw ParseError("missing coordinate name", lineno, col);
        if (!(fields >> wkw) || wkw != "weight") throw ParseError("expected 'weight'", lineno, line.find(name) + name.size() + 1);
        if (!(fields >> w)) throw ParseError("expected an integer weight", lineno, line.find("weight") + 7);
        std::string junk;
        if (fields >> junk) throw ParseError("trailing text '" + junk + "'", lineno, line.find(junk) + 1);
        for (const auto& [n, _] : chart.coordinates)
            if (n == name) throw ParseError("duplicate coordinate '" + name + "'", lineno, col);
        chart.coordinates.emplace_back(name, w);
    }
    return chart;
}

}  // namespace hstab

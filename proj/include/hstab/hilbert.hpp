#pragma once

// Hilbert functions and polynomials, Gotzmann numbers and a stabilisation probe for regularity.

#include "hstab/groebner.hpp"
#include "hstab/polynomial.hpp"
#include "hstab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstab {

/// Univariate polynomial with rational coefficients; coeffs[k] multiplies m^k.
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c1 * m + c0
    static HilbertPolynomial linear(const Rational& c1, const Rational& c0) { return HilbertPolynomial({c0, c1}); }

    /// C(m + shift, k) as a polynomial in m.
    static HilbertPolynomial binomial_in(std::int64_t shift, std::uint32_t k) {
        HilbertPolynomial p({Rational(1)});
        for (std::uint32_t j = 1; j <= k; ++j) {
            // (m + shift - k + j) / j
            Rational c0(static_cast<long>(shift - static_cast<std::int64_t>(k) + j), static_cast<long>(j));
            c0.canonicalize();
            p = p * HilbertPolynomial({c0, Rational(1, static_cast<long>(j))});
        }
        return p;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& m) const {
        Rational v = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * m + coeffs_[k];
        return v;
    }

    friend HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
        return HilbertPolynomial(std::move(c));
    }
    friend HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
        return HilbertPolynomial(std::move(c));
    }
    friend HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return HilbertPolynomial(std::move(c));
    }
    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

    std::string to_string(const std::string& var = "m") const {
        if (coeffs_.empty()) return "0";
        Ring r({var});
        Polynomial p(1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            p.add_term(Monomial({static_cast<Monomial::Exponent>(k)}), coeffs_[k]);
        return hstab::to_string(p, r);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Parses a polynomial in one variable (default name m) with the polynomial grammar.
inline HilbertPolynomial parse_hilbert_polynomial(std::string_view text, const std::string& var = "m") {
    Ring r({var});
    auto p = parse_polynomial(text, r);
    std::vector<Rational> c;
    for (const auto& [mono, coef] : p.terms()) {
        std::size_t k = mono[0];
        if (c.size() <= k) c.resize(k + 1, Rational(0));
        c[k] += coef;
    }
    return HilbertPolynomial(std::move(c));
}

/// T(m) = C(N + m, N), the number of degree-m monomials in N+1 variables.
inline Integer monomial_count(std::size_t nvars, std::uint32_t m) {
    if (nvars == 0) return m == 0 ? 1 : 0;
    return binomial(static_cast<unsigned long>(nvars - 1 + m), static_cast<unsigned long>(nvars - 1));
}

/// dim (S/I)_m; independent of the order of the basis.
inline Integer hilbert_function(const GroebnerBasis& gb, std::uint32_t m) {
    return monomial_count(gb.nvars(), m) - Integer(static_cast<unsigned long>(initial_ideal_degree(gb, m).size()));
}

/// d*m + 1 - g
inline HilbertPolynomial hilbert_polynomial_of_curve(std::int64_t degree, std::int64_t genus) {
    if (degree < 1) throw std::invalid_argument("curve degree must be positive");
    return HilbertPolynomial::linear(Rational(static_cast<long>(degree)), Rational(static_cast<long>(1 - genus)));
}

/// Length of the Gotzmann representation P(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i),
/// a_1 >= ... >= a_r >= 0, found greedily.
inline std::uint64_t gotzmann_number(const HilbertPolynomial& p, std::uint64_t max_terms = 10'000'000) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial is not a Hilbert polynomial of a nonempty scheme");
    for (int k = 0; k <= p.degree(); ++k)
        if (!is_integer(p(Rational(k)))) throw std::invalid_argument("polynomial is not integer-valued");
    HilbertPolynomial rest = p;
    std::uint64_t i = 0;
    while (!rest.is_zero()) {
        if (rest.leading() < 0) throw std::invalid_argument("no Gotzmann representation: negative leading coefficient");
        if (++i > max_terms) throw std::invalid_argument("Gotzmann representation does not terminate");
        const auto a = static_cast<std::uint32_t>(rest.degree());
        rest = rest - HilbertPolynomial::binomial_in(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(i) + 1, a);
        if (rest.degree() > static_cast<int>(a)) throw std::logic_error("degree increased in Gotzmann decomposition");
    }
    return i;
}

/// Smallest m0 in [1, m_max] with HF(m) = P(m) for all m0 <= m <= m_max; nullopt if HF(m_max) != P(m_max).
inline std::optional<std::uint32_t> regularity_probe(const GroebnerBasis& gb, const HilbertPolynomial& p,
                                                     std::uint32_t m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    std::optional<std::uint32_t> found;
    for (std::uint32_t m = m_max; m >= 1; --m) {
        if (Rational(hilbert_function(gb, m)) != p(Rational(static_cast<long>(m)))) break;
        found = m;
    }
    return found;
}

}  // namespace hstab

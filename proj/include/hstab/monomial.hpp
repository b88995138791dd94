#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hstab {

/// Dense exponent vector x0^e0 * ... * xN^eN.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
        degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }
    Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1) {
        std::vector<Exponent> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint64_t degree() const { return degree_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        std::vector<Exponent> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
        return Monomial(std::move(e));
    }

    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        std::vector<Exponent> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (b.exps_[i] > a.exps_[i]) throw std::domain_error("monomial quotient is not exact");
            e[i] = a.exps_[i] - b.exps_[i];
        }
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        std::vector<Exponent> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    // Storage order only (plain lexicographic on exponent vectors); term orders live in MonomialOrder.
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
    static void check_same(const Monomial& a, const Monomial& b) {
        if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("monomials live in different rings");
    }

    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

/// All monomials of total degree d in n variables, x0^d first (lexicographically descending).
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(std::vector<Monomial::Exponent>{});
        return out;
    }
    std::vector<Monomial::Exponent> e(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

}  // namespace hstab

#pragma once

#include "hstab/monomial.hpp"
#include "hstab/rational.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstab {

/// Diagonal one-parameter subgroup t -> diag(t^r0, ..., t^rN).
class OneParamSubgroup {
public:
    OneParamSubgroup() = default;
    explicit OneParamSubgroup(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}
    OneParamSubgroup(std::initializer_list<std::int64_t> w) : weights_(w) {}

    std::size_t size() const { return weights_.size(); }
    std::int64_t operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    Integer weight_total() const {
        Integer s = 0;
        for (auto w : weights_) s += Integer(static_cast<long>(w));
        return s;
    }

    /// All weights equal: acts trivially on every Hilbert point.
    bool is_scalar() const {
        for (auto w : weights_)
            if (w != weights_.front()) return false;
        return true;
    }

    OneParamSubgroup translated(std::int64_t c) const {
        auto w = weights_;
        for (auto& x : w) x += c;
        return OneParamSubgroup(std::move(w));
    }
    OneParamSubgroup scaled(std::int64_t k) const {
        auto w = weights_;
        for (auto& x : w) x *= k;
        return OneParamSubgroup(std::move(w));
    }
    OneParamSubgroup inverse() const { return scaled(-1); }

    friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;

private:
    std::vector<std::int64_t> weights_;
};

/// sum_i e_i * r_i
inline std::int64_t weight_of(const Monomial& m, const OneParamSubgroup& rho) {
    if (m.nvars() != rho.size())
        throw std::invalid_argument("weight vector has length " + std::to_string(rho.size()) + " but monomial has " +
                                    std::to_string(m.nvars()) + " variables");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) s += static_cast<std::int64_t>(m[i]) * rho[i];
    return s;
}

/// Comma-separated integers, e.g. "6,4,3,2,0".
inline OneParamSubgroup parse_weights(std::string_view text) {
    std::vector<std::int64_t> w;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad weight '" + item + "' in '" + std::string(text) + "'");
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size()) throw std::invalid_argument("bad weight '" + item + "' in '" + std::string(text) + "'");
        w.push_back(v);
    }
    if (w.empty()) throw std::invalid_argument("empty weight vector");
    return OneParamSubgroup(std::move(w));
}

inline std::string to_string(const OneParamSubgroup& rho) {
    std::string s;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rho[i]);
    }
    return s;
}

}  // namespace hstab

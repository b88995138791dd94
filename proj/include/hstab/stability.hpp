#pragma once

// Hilbert-Mumford indices of Hilbert points, torus semistability via state polytopes,
// and the certificates that back each verdict.

#include "hstab/degree_slice.hpp"
#include "hstab/groebner.hpp"
#include "hstab/hilbert.hpp"
#include "hstab/min_norm.hpp"
#include "hstab/monomial_order.hpp"
#include "hstab/one_param_subgroup.hpp"
#include "hstab/polynomial.hpp"
#include "hstab/state_polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hstab {

/// Sign convention: index > 0 means the Hilbert point passes strictly against rho.
enum class Verdict { Stable, StrictlySemistable, Unstable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::StrictlySemistable: return "strictlySemistable";
        case Verdict::Unstable: return "unstable";
    }
    return "?";
}

inline Verdict verdict_of(const Rational& index) {
    if (index > 0) return Verdict::Stable;
    if (index == 0) return Verdict::StrictlySemistable;
    return Verdict::Unstable;
}

struct HilbertMumfordReport {
    Rational m;
    OneParamSubgroup rho;
    Rational index;                 // average_term - standard_weight_sum
    Integer standard_weight_sum;    // over degree-m monomials outside in(I)
    Rational average_term;          // m * P(m) * sum(r) / (N + 1)
    Verdict verdict = Verdict::StrictlySemistable;
    Integer hilbert_function;       // HF(m)
    Rational hilbert_polynomial_value;  // P(m)
    bool below_regularity = false;  // HF(m) != P(m); the value is still reported
    std::string order;              // name of the order used for in(I)
};

namespace detail {

inline std::uint32_t integral_degree(const Rational& m) {
    if (!is_integer(m))
        throw std::domain_error("m = " + to_string(m) +
                                " is not an integer; use the closed-form moduli calculus for rational m");
    if (m < 1) throw std::invalid_argument("m must be a positive integer");
    if (!m.get_num().fits_uint_p()) throw std::invalid_argument("m too large");
    return static_cast<std::uint32_t>(m.get_num().get_ui());
}

inline HilbertMumfordReport hm_index_with_value(const Ideal& ideal, const Rational& m_rat, const OneParamSubgroup& rho,
                                                const Rational& p_value, const MonomialOrder& tie_break) {
    const auto m = integral_degree(m_rat);
    if (rho.size() != ideal.nvars())
        throw std::invalid_argument("weight vector has length " + std::to_string(rho.size()) + ", ring has " +
                                    std::to_string(ideal.nvars()) + " variables");
    const auto order = MonomialOrder::weighted(rho, tie_break);
    const auto gb = buchberger(ideal, order);
    HilbertMumfordReport r;
    r.m = m_rat;
    r.rho = rho;
    r.order = order.name();
    r.standard_weight_sum = standard_monomial_weight_sum(gb, m, rho);
    r.hilbert_function = hilbert_function(gb, m);
    r.hilbert_polynomial_value = p_value;
    r.below_regularity = Rational(r.hilbert_function) != p_value;
    r.average_term = m_rat * p_value * Rational(rho.weight_total()) / Rational(static_cast<long>(ideal.nvars()));
    r.index = r.average_term - Rational(r.standard_weight_sum);
    r.verdict = verdict_of(r.index);
    return r;
}

}  // namespace detail

/// mu([X]_m, rho) = m P(m) sum(r_i) / (N+1) - sum of rho-weights of the degree-m standard
/// monomials of in(I) under the rho-weighted graded order refined by `tie_break`.
inline HilbertMumfordReport hilbert_mumford_index(const Ideal& ideal, const Rational& m, const OneParamSubgroup& rho,
                                                  const HilbertPolynomial& p,
                                                  const MonomialOrder& tie_break = MonomialOrder::graded_lex()) {
    return detail::hm_index_with_value(ideal, m, rho, p(m), tie_break);
}

/// The same index evaluated on the ideal side: weight of the degree-m initial monomials
/// minus m (T(m) - P(m)) sum(r_i) / (N+1).
inline Rational ideal_side_index(const Ideal& ideal, std::uint32_t m, const OneParamSubgroup& rho,
                                 const HilbertPolynomial& p) {
    const auto gb = buchberger(ideal, MonomialOrder::weighted(rho));
    Integer in_weight = 0;
    for (const auto& mono : initial_ideal_degree(gb, m)) in_weight += Integer(static_cast<long>(weight_of(mono, rho)));
    const Rational mr(static_cast<long>(m));
    const Rational t(monomial_count(ideal.nvars(), m));
    return Rational(in_weight) - mr * (t - p(mr)) * Rational(rho.weight_total()) / Rational(static_cast<long>(ideal.nvars()));
}

// ---------------------------------------------------------------------------------------------
// Kempf reduction

struct KempfHypothesis {
    std::vector<std::int64_t> stabilizer_weights;

    bool multiplicity_free() const {
        std::set<std::int64_t> s(stabilizer_weights.begin(), stabilizer_weights.end());
        return s.size() == stabilizer_weights.size();
    }
};

struct KempfCheck {
    bool applicable = false;
    std::string reason;  // empty when applicable
};

/// Applicable iff the stabiliser weights are pairwise distinct.
inline KempfCheck check_kempf_reduction(const KempfHypothesis& h) {
    std::set<std::int64_t> seen;
    for (auto w : h.stabilizer_weights)
        if (!seen.insert(w).second) return {false, "repeated weight " + std::to_string(w)};
    return {true, ""};
}

/// Does the 1-PS with these weights fix the ideal? (Every reduced Groebner basis element is
/// homogeneous for the weight grading.)
inline bool one_param_subgroup_fixes(const Ideal& ideal, const std::vector<std::int64_t>& weights) {
    if (weights.size() != ideal.nvars()) throw std::invalid_argument("stabiliser weight length does not match ring");
    const auto gb = buchberger(ideal, MonomialOrder::graded_revlex());
    for (const auto& g : gb.elements())
        if (!g.is_homogeneous(weights)) return false;
    return true;
}

// ---------------------------------------------------------------------------------------------
// Torus semistability

enum class TorusVerdict { Semistable, Unstable };

inline const char* to_string(TorusVerdict v) { return v == TorusVerdict::Semistable ? "semistable" : "unstable"; }

struct ConvexWeight {
    std::size_t vertex;  // index into polytope.vertices
    Rational weight;
};

struct TorusSemistability {
    TorusVerdict verdict = TorusVerdict::Semistable;
    std::uint32_t m = 0;
    Vector barycenter;
    StatePolytope polytope;
    std::vector<ConvexWeight> combination;              // when semistable
    std::optional<HilbertMumfordReport> destabilizing;  // when unstable; re-checked
    std::optional<KempfCheck> kempf;
    bool stabilizer_fixes_ideal = false;
    bool full_semistability = false;  // semistable, Kempf applicable, stabiliser verified
};

struct SemistabilityOptions {
    StatePolytopeOptions polytope;
    std::optional<KempfHypothesis> kempf;
};

/// Is m (T(m) - HF(m)) / (N+1) * (1,...,1) in the ideal-side state polytope?
inline TorusSemistability is_torus_semistable(const Ideal& ideal, std::uint32_t m, const SemistabilityOptions& opts = {}) {
    const std::size_t n = ideal.nvars();
    TorusSemistability out;
    out.m = m;
    out.polytope = state_polytope(ideal, m, opts.polytope);
    const auto gb = buchberger(ideal, MonomialOrder::graded_revlex());
    const Integer hf = hilbert_function(gb, m);
    const Rational mass = Rational(static_cast<long>(m)) * Rational(monomial_count(n, m) - hf) / Rational(static_cast<long>(n));
    out.barycenter.assign(n, mass);

    std::vector<Vector> shifted;
    for (const auto& v : out.polytope.vertices) {
        Vector s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = Rational(static_cast<long>(v[i])) - mass;
        shifted.push_back(std::move(s));
    }
    auto nearest = min_norm_point(shifted);
    if (nearest.is_origin()) {
        out.verdict = TorusVerdict::Semistable;
        for (std::size_t k = 0; k < nearest.support.size(); ++k)
            out.combination.push_back({nearest.support[k], nearest.weights[k]});
        std::sort(out.combination.begin(), out.combination.end(),
                  [](const ConvexWeight& a, const ConvexWeight& b) { return a.vertex < b.vertex; });
    } else {
        out.verdict = TorusVerdict::Unstable;
        Vector dir(n);
        for (std::size_t i = 0; i < n; ++i) dir[i] = -nearest.point[i];
        auto w = primitive_integer_vector(dir);
        Integer lo = *std::min_element(w.begin(), w.end());
        Integer g = 0;
        for (auto& x : w) {
            x -= lo;
            g = gcd(g, x);
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        std::vector<std::int64_t> rho;
        for (const auto& x : w) rho.push_back(to_int64(x));
        auto report = detail::hm_index_with_value(ideal, Rational(static_cast<long>(m)), OneParamSubgroup(rho), Rational(hf),
                                                  MonomialOrder::graded_lex());
        if (report.verdict != Verdict::Unstable) throw std::logic_error("destabilising certificate failed its re-check");
        out.destabilizing = std::move(report);
    }
    if (opts.kempf) {
        out.kempf = check_kempf_reduction(*opts.kempf);
        out.stabilizer_fixes_ideal = one_param_subgroup_fixes(ideal, opts.kempf->stabilizer_weights);
        out.full_semistability =
            out.verdict == TorusVerdict::Semistable && out.kempf->applicable && out.stabilizer_fixes_ideal;
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Thickened hyperplanes

struct ThickeningResult {
    std::size_t coordinate = 0;
    std::uint32_t r = 0;          // smallest r <= r_max with x_c^r in I; 0 if none
    std::int64_t bound = 0;       // unstable for m > (N+1)(r-1)
    OneParamSubgroup rho;         // weight 0 on x_c, 1 elsewhere (in the ideal's coordinates)
};

/// Detects x_c^r in I by ideal membership. The smallest such r gives the best threshold.
inline ThickeningResult thickening_instability(const Ideal& ideal, std::size_t coordinate, std::uint32_t r_max) {
    const std::size_t n = ideal.nvars();
    if (coordinate >= n) throw std::invalid_argument("coordinate index out of range");
    const auto gb = buchberger(ideal, MonomialOrder::graded_revlex());
    ThickeningResult out;
    out.coordinate = coordinate;
    std::vector<std::int64_t> w(n, 1);
    w[coordinate] = 0;
    out.rho = OneParamSubgroup(w);
    for (std::uint32_t r = 1; r <= r_max; ++r) {
        if (gb.contains(Polynomial(Monomial::variable(n, coordinate, r), 1))) {
            out.r = r;
            out.bound = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(r) - 1);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Monomial bases of (S/I)_m

class NotABasisError : public std::invalid_argument {
public:
    NotABasisError(std::size_t index, std::size_t size, std::size_t expected, std::size_t defect)
        : std::invalid_argument("monomial set " + std::to_string(index) + " is not a basis of the quotient: " +
                                std::to_string(size) + " monomials (expected " + std::to_string(expected) +
                                "), rank defect " + std::to_string(defect)),
          index_(index),
          defect_(defect) {}
    std::size_t index() const { return index_; }
    std::size_t defect() const { return defect_; }

private:
    std::size_t index_;
    std::size_t defect_;
};

inline Integer basis_weight_sum(const std::vector<Monomial>& basis, const OneParamSubgroup& rho) {
    Integer s = 0;
    for (const auto& m : basis) s += Integer(static_cast<long>(weight_of(m, rho)));
    return s;
}

struct BasisBound {
    /// true: for every traceless weight vector some listed basis has weight sum <= 0.
    bool holds = false;
    std::vector<Rational> multipliers;        // y_i >= 0, sum 1, sum_i y_i c_i in span(1,...,1)
    std::vector<std::vector<std::int64_t>> exponent_sums;  // c_i
    std::optional<OneParamSubgroup> witness;  // traceless r with every sum > 0, when !holds
};

/// Decides whether {c_i . r > 0 for all i, sum r = 0} is infeasible, where c_i is the exponent
/// sum of the i-th basis; infeasibility is certified by a convex combination of the projected c_i
/// equal to zero.
inline BasisBound monomial_basis_index_bound(const Ideal& ideal, std::uint32_t m,
                                             const std::vector<std::vector<Monomial>>& bases) {
    if (bases.empty()) throw std::invalid_argument("no bases given");
    const std::size_t n = ideal.nvars();
    const auto gb = buchberger(ideal, MonomialOrder::graded_revlex());
    const DegreeSlice slice(gb, m);
    const std::size_t quotient_dim = slice.monomials().size() - slice.dimension();
    BasisBound out;
    std::vector<Vector> projected;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        std::vector<std::size_t> cols;
        for (const auto& mono : bases[k]) {
            if (mono.nvars() != n || mono.degree() != m) throw NotABasisError(k, bases[k].size(), quotient_dim, quotient_dim);
            cols.push_back(slice.column_of(mono));
        }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        const std::size_t rk = slice.rank_outside(cols);
        if (cols.size() != bases[k].size() || cols.size() != quotient_dim || rk != slice.dimension())
            throw NotABasisError(k, bases[k].size(), quotient_dim, slice.dimension() - rk);
        auto c = slice.exponent_sum(cols);
        out.exponent_sums.push_back(c);
        Rational mean = 0;
        for (auto x : c) mean += Rational(static_cast<long>(x));
        mean /= Rational(static_cast<long>(n));
        Vector p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = Rational(static_cast<long>(c[i])) - mean;
        projected.push_back(std::move(p));
    }
    auto nearest = min_norm_point(projected);
    if (nearest.is_origin()) {
        out.holds = true;
        out.multipliers.assign(bases.size(), Rational(0));
        for (std::size_t k = 0; k < nearest.support.size(); ++k) out.multipliers[nearest.support[k]] = nearest.weights[k];
        // Re-check: sum y_i c_i must be a multiple of (1,...,1).
        Vector s(n, Rational(0));
        for (std::size_t k = 0; k < bases.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) s[i] += out.multipliers[k] * Rational(static_cast<long>(out.exponent_sums[k][i]));
        for (std::size_t i = 1; i < n; ++i)
            if (s[i] != s[0]) throw std::logic_error("basis-bound certificate failed its re-check");
    } else {
        out.holds = false;
        std::vector<std::int64_t> r;
        for (const auto& x : primitive_integer_vector(nearest.point)) r.push_back(to_int64(x));
        out.witness = OneParamSubgroup(r);
    }
    return out;
}

}  // namespace hstab

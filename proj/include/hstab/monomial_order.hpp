#pragma once

#include "hstab/monomial.hpp"
#include "hstab/one_param_subgroup.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstab {

/// A monomial order given by a sequence of integer weight rows followed by a final
/// lex or reverse-lex tie-break. Earlier rows dominate; larger weight means larger monomial.
///
/// The named kinds are the ones used throughout:
///  - GradedLex:    rows [1..1], lex tie-break
///  - GradedRevLex: rows [1..1], reverse-lex tie-break
///  - WeightedGraded(rho, tb): rows [1..1, rho], tie-break of tb (GradedLex or GradedRevLex)
///  - WeightMatrix: arbitrary rows (elimination orders, perturbed orders in fan traversal);
///    the caller guarantees the rows make it a well-order on the monomials in play.
class MonomialOrder {
public:
    enum class Kind { GradedLex, GradedRevLex, WeightedGraded, WeightMatrix };
    enum class TieBreak { Lex, RevLex };

    static MonomialOrder graded_lex() { return MonomialOrder(Kind::GradedLex, {}, TieBreak::Lex, true); }
    static MonomialOrder graded_revlex() { return MonomialOrder(Kind::GradedRevLex, {}, TieBreak::RevLex, true); }

    static MonomialOrder weighted(const OneParamSubgroup& rho, const MonomialOrder& tie_break = graded_lex()) {
        if (tie_break.kind_ != Kind::GradedLex && tie_break.kind_ != Kind::GradedRevLex)
            throw std::invalid_argument("tie-break of a weighted order must be glex or grevlex");
        MonomialOrder o(Kind::WeightedGraded, {rho.weights()}, tie_break.tie_, true);
        o.rho_ = rho;
        return o;
    }

    static MonomialOrder weight_matrix(std::vector<std::vector<std::int64_t>> rows, TieBreak tie, bool graded) {
        return MonomialOrder(Kind::WeightMatrix, std::move(rows), tie, graded);
    }

    Kind kind() const { return kind_; }
    TieBreak tie_break() const { return tie_; }
    bool is_graded() const { return graded_; }
    const OneParamSubgroup& rho() const { return rho_; }

    /// Negative if a < b, zero if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (graded_ && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (const auto& row : rows_) {
            if (row.size() != a.nvars()) throw std::invalid_argument("order weight row does not match ring size");
            std::int64_t wa = 0, wb = 0;
            for (std::size_t i = 0; i < row.size(); ++i) {
                wa += row[i] * static_cast<std::int64_t>(a[i]);
                wb += row[i] * static_cast<std::int64_t>(b[i]);
            }
            if (wa != wb) return wa < wb ? -1 : 1;
        }
        const std::size_t n = a.nvars();
        if (tie_ == TieBreak::Lex) {
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        } else {
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Name as accepted by parse(): grevlex, glex, weighted:<r0,...,rN>:<glex|grevlex>.
    std::string name() const {
        switch (kind_) {
            case Kind::GradedLex: return "glex";
            case Kind::GradedRevLex: return "grevlex";
            case Kind::WeightedGraded:
                return "weighted:" + to_string(rho_) + ":" + (tie_ == TieBreak::Lex ? "glex" : "grevlex");
            case Kind::WeightMatrix: return "matrix";
        }
        return "?";
    }

    static MonomialOrder parse(std::string_view text) {
        if (text == "glex") return graded_lex();
        if (text == "grevlex") return graded_revlex();
        constexpr std::string_view prefix = "weighted:";
        if (text.substr(0, prefix.size()) == prefix) {
            auto rest = text.substr(prefix.size());
            auto colon = rest.rfind(':');
            MonomialOrder tb = graded_lex();
            auto weights = rest;
            if (colon != std::string_view::npos) {
                weights = rest.substr(0, colon);
                auto tbname = rest.substr(colon + 1);
                if (tbname == "glex")
                    tb = graded_lex();
                else if (tbname == "grevlex")
                    tb = graded_revlex();
                else
                    throw std::invalid_argument("unknown tie-break '" + std::string(tbname) + "'");
            }
            return weighted(parse_weights(weights), tb);
        }
        throw std::invalid_argument("unknown monomial order '" + std::string(text) + "'");
    }

private:
    MonomialOrder(Kind k, std::vector<std::vector<std::int64_t>> rows, TieBreak tie, bool graded)
        : kind_(k), rows_(std::move(rows)), tie_(tie), graded_(graded) {}

    Kind kind_;
    std::vector<std::vector<std::int64_t>> rows_;
    TieBreak tie_;
    bool graded_;
    OneParamSubgroup rho_;
};

}  // namespace hstab

#pragma once

#include "hstab/monomial.hpp"
#include "hstab/rational.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hstab {

/// Error raised by the text front ends; carries a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }
    std::size_t line_;
    std::size_t column_;
};

/// Ordered variable names of k[x0..xN].
class Ring {
public:
    Ring() = default;
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
    }

    /// x0, x1, ..., x{n-1}
    static Ring standard(std::size_t n, const std::string& prefix = "x") {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
        return Ring(std::move(v));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
};

/// Sparse polynomial with exact rational coefficients. No zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(const Monomial& m, const Rational& c) : nvars_(m.nvars()) {
        if (c != 0) terms_.emplace(m, c);
    }

    static Polynomial constant(std::size_t nvars, const Rational& c) { return Polynomial(Monomial(nvars), c); }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Maximal total degree; none for the zero polynomial.
    std::optional<std::uint64_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Homogeneous with respect to the grading deg(x_i) = grading[i].
    bool is_homogeneous(const std::vector<std::int64_t>& grading) const {
        if (grading.size() != nvars_) throw std::invalid_argument("grading length does not match ring");
        std::optional<std::int64_t> w;
        for (const auto& [m, c] : terms_) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < nvars_; ++i) s += grading[i] * static_cast<std::int64_t>(m[i]);
            if (w && *w != s) return false;
            w = s;
        }
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("monomial does not belong to this ring");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Monomial& u) {
        Polynomial r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m * u, c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// A homogeneous ideal given by generators, together with its ring.
struct Ideal {
    Ring ring;
    std::vector<Polynomial> generators;

    std::size_t nvars() const { return ring.size(); }
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring, std::size_t line) : s_(text), ring_(ring), line_(line) {}

    Polynomial parse() {
        Polynomial result(ring_.size());
        skip_ws();
        if (pos_ >= s_.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            Rational sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = term();
            result.add_term(m, sign * c);
            skip_ws();
            if (pos_ >= s_.size()) break;
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
    bool at_ident_start() const {
        return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }

    Integer natural() {
        skip_ws();
        if (!at_digit()) fail("expected a number");
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::pair<Monomial, Rational> term() {
        skip_ws();
        Rational coef = 1;
        Monomial mono(ring_.size());
        if (at_digit()) {
            Integer num = natural();
            Integer den = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = natural();
                if (den == 0) fail("zero denominator");
            }
            coef = Rational(num, den);
            coef.canonicalize();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*')
                ++pos_;
            else if (!at_ident_start())  // "6m" is 6*m
                return {mono, coef};
        }
        mono = mono * factor();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                mono = mono * factor();
            } else {
                break;
            }
        }
        return {mono, coef};
    }

    Monomial factor() {
        skip_ws();
        if (!at_ident_start()) fail(pos_ < s_.size() ? std::string("unexpected character '") + s_[pos_] + "'" : "unexpected end of input");
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        auto idx = ring_.index_of(name);
        if (!idx) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        Monomial::Exponent power = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
            Integer e = natural();
            if (!e.fits_uint_p()) fail("exponent too large");
            power = static_cast<Monomial::Exponent>(e.get_ui());
        }
        return Monomial::variable(ring_.size(), *idx, power);
    }

    std::string_view s_;
    const Ring& ring_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `poly := term (('+'|'-') term)*`, `term := [coef ['*']] factor ('*' factor)* | coef`,
/// `factor := var ['^' nat]`, `coef := int ['/' nat]`. Whitespace is insignificant.
inline Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 1) {
    return detail::PolyParser(text, ring, line).parse();
}

/// Canonical text form; terms in descending graded-lex order.
inline std::string to_string(const Polynomial& p, const Ring& ring) {
    if (p.nvars() != ring.size()) throw std::invalid_argument("ring does not match polynomial");
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += ring.name(i);
            if (m[i] > 1) factors += "^" + std::to_string(m[i]);
        }
        if (factors.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += to_string(a) + "*" + factors;
        }
    }
    return out;
}

}  // namespace hstab

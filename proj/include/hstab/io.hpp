#pragma once

// Ideal files and input resolution.
//
//   # comment
//   vars: x0 x1 x2
//   poly: x0^2 - x1*x2
//   hilbert: 2m + 1        (optional)

#include "hstab/curves.hpp"
#include "hstab/hilbert.hpp"
#include "hstab/polynomial.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstab {

/// Unreadable input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IdealInput {
    std::string name;  // example name or file path
    Ideal ideal;
    std::optional<HilbertPolynomial> hilbert_polynomial;
    std::optional<KempfHypothesis> stabilizer;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

// error from a parser that saw only the text after "key:"
inline ParseError shifted(const ParseError& e, std::size_t line, std::size_t offset) {
    std::string msg = e.what();
    auto sep = msg.find(": ");
    return ParseError(sep == std::string::npos ? msg : msg.substr(sep + 2), line, e.column() + offset);
}

}  // namespace detail

inline IdealInput parse_ideal_file(std::string_view text) {
    IdealInput out;
    std::optional<Ring> ring;
    std::vector<Polynomial> polys;
    std::stringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'vars:', 'poly:' or 'hilbert:'", lineno, first + 1);
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string rest = line.substr(colon + 1);
        while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.pop_back();
        if (key == "vars") {
            if (ring) throw ParseError("duplicate 'vars:' line", lineno, first + 1);
            std::stringstream names(rest);
            std::vector<std::string> v;
            for (std::string s; names >> s;) v.push_back(s);
            if (v.empty()) throw ParseError("no variables listed", lineno, colon + 2);
            try {
                ring = Ring(v);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lineno, colon + 2);
            }
        } else if (key == "poly") {
            if (!ring) throw ParseError("'poly:' before 'vars:'", lineno, first + 1);
            try {
                polys.push_back(parse_polynomial(rest, *ring, lineno));
            } catch (const ParseError& e) {
                throw detail::shifted(e, lineno, colon + 1);
            }
        } else if (key == "hilbert") {
            if (out.hilbert_polynomial) throw ParseError("duplicate 'hilbert:' line", lineno, first + 1);
            try {
                out.hilbert_polynomial = parse_hilbert_polynomial(rest);
            } catch (const ParseError& e) {
                throw detail::shifted(e, lineno, colon + 1);
            }
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, first + 1);
        }
    }
    if (!ring) throw ParseError("missing 'vars:' line", lineno + 1, 1);
    out.ideal = Ideal{*ring, std::move(polys)};
    return out;
}

inline bool is_example_name(const std::string& s) {
    return s == "bicuspidal-g2-tricanonical" || s.rfind("a2b-tail:", 0) == 0 || s.rfind("thickened-line:", 0) == 0;
}

/// A catalogue name or a path to an ideal file.
inline IdealInput resolve_ideal(const std::string& spec) {
    if (is_example_name(spec)) {
        auto ex = named_example(spec);
        return {ex.name, ex.ideal, ex.hilbert_polynomial, ex.stabilizer};
    }
    auto in = parse_ideal_file(read_file(spec));
    in.name = spec;
    return in;
}

}  // namespace hstab

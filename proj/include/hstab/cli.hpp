#pragma once

// Command-line front end. run() takes the arguments after the program name and writes the
// report to `out`, diagnostics to `err`. Exit codes: 0 ok, 2 bad input, 1 internal failure.
// Every command is a thin wrapper over a library call.

#include "hstab/curves.hpp"
#include "hstab/groebner.hpp"
#include "hstab/hilbert.hpp"
#include "hstab/io.hpp"
#include "hstab/moduli.hpp"
#include "hstab/report.hpp"
#include "hstab/stability.hpp"
#include "hstab/state_polytope.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hstab::cli {

struct Options {
    std::string ideal;
    std::string example;
    std::string m;
    std::string rho;
    std::string order;
    std::string hilbert_poly;
    std::string format = "text";
    std::string curve;
    std::string chart;
    std::string alpha;
    std::string wr;
    std::string stabilizer;
    std::string name;
    std::uint64_t seed = StatePolytopeOptions{}.seed;
    std::size_t threads = 1;
    std::size_t restarts = StatePolytopeOptions{}.random_restarts;
    std::int64_t b = 0;
    std::int64_t g = 0;
    std::int64_t tail = 0;
    std::size_t coord = 0;
    std::uint32_t r_max = 32;
};

namespace detail {

inline bool json(const Options& o) { return o.format == "json"; }

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline IdealInput ideal_input(const Options& o) {
    if (!o.example.empty() && !o.ideal.empty()) throw std::invalid_argument("give --ideal or --example, not both");
    if (!o.example.empty()) {
        if (!is_example_name(o.example)) throw std::invalid_argument("unknown example '" + o.example + "'");
        return resolve_ideal(o.example);
    }
    if (o.ideal.empty()) throw std::invalid_argument("an ideal is required (--ideal <file|example> or --example <name>)");
    return resolve_ideal(o.ideal);
}

inline Rational need_m(const Options& o) {
    if (o.m.empty()) throw std::invalid_argument("--m is required");
    return parse_rational(o.m);
}

inline std::uint32_t need_integral_m(const Options& o) { return hstab::detail::integral_degree(need_m(o)); }

inline std::string joined(const std::vector<std::string>& v, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string vec_string(const std::vector<std::int64_t>& v) {
    std::vector<std::string> s;
    for (auto x : v) s.push_back(std::to_string(x));
    return "(" + joined(s) + ")";
}

inline std::string poly_list(const std::vector<Polynomial>& ps, const Ring& r) {
    std::string s;
    for (const auto& p : ps) s += "  " + to_string(p, r) + "\n";
    return s;
}

inline std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps, const Ring& r) {
    std::vector<std::string> s;
    for (const auto& p : ps) s.push_back(to_string(p, r));
    return s;
}

inline std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms, const Ring& r) {
    std::vector<std::string> s;
    for (const auto& m : ms) s.push_back(to_string(Polynomial(m, 1), r));
    return s;
}

// Gotzmann threshold is advisory only: finite Hilbert stability is meant to be tested below it.
inline void gotzmann_warning(const std::optional<HilbertPolynomial>& p, std::uint32_t m, std::ostream& err) {
    if (!p) return;
    try {
        auto gz = gotzmann_number(*p);
        if (m < gz)
            err << "warning: m = " << m << " is below the Gotzmann number " << gz
                << " of P; the Hilbert point map need not be defined on all of Hilb\n";
    } catch (const std::exception&) {
    }
}

inline StatePolytopeOptions polytope_options(const Options& o) {
    StatePolytopeOptions p;
    p.seed = o.seed;
    p.threads = o.threads;
    p.random_restarts = o.restarts;
    return p;
}

// ---------------------------------------------------------------------------------------------

inline void cmd_groebner(const Options& o, std::ostream& out, std::ostream&) {
    auto in = ideal_input(o);
    auto order = MonomialOrder::parse(o.order.empty() ? "grevlex" : o.order);
    auto gb = buchberger(in.ideal, order);
    auto elems = gb.elements();
    if (json(o)) {
        Json j;
        j["kind"] = "groebner";
        j["order"] = order.name();
        j["basis"] = poly_strings(elems, in.ideal.ring);
        j["leading"] = monomial_strings(gb.leading_monomials(), in.ideal.ring);
        j["reduced"] = is_reduced(gb);
        emit(out, j);
        return;
    }
    out << "reduced Groebner basis (" << order.name() << "), " << elems.size() << " elements:\n"
        << poly_list(elems, in.ideal.ring);
}

inline void cmd_initial_ideal(const Options& o, std::ostream& out, std::ostream&) {
    auto in = ideal_input(o);
    auto order = MonomialOrder::parse(o.order.empty() ? "grevlex" : o.order);
    auto gb = buchberger(in.ideal, order);
    auto lead = monomial_strings(gb.leading_monomials(), in.ideal.ring);
    Json j;
    j["kind"] = "initial-ideal";
    j["order"] = order.name();
    j["generators"] = lead;
    std::string text = "in(I) for " + order.name() + ": <" + joined(lead) + ">\n";
    if (!o.m.empty()) {
        auto m = need_integral_m(o);
        auto ini = monomial_strings(initial_ideal_degree(gb, m), in.ideal.ring);
        auto st = monomial_strings(standard_monomials(gb, m), in.ideal.ring);
        j["m"] = std::to_string(m);
        j["initial_monomials"] = ini;
        j["standard_monomials"] = st;
        text += "degree " + std::to_string(m) + ": " + std::to_string(ini.size()) + " initial, " +
                std::to_string(st.size()) + " standard\n  initial: " + joined(ini) + "\n  standard: " + joined(st) + "\n";
    }
    if (json(o))
        emit(out, j);
    else
        out << text;
}

inline void cmd_hilbert_function(const Options& o, std::ostream& out, std::ostream&) {
    auto in = ideal_input(o);
    auto m = need_integral_m(o);
    auto gb = buchberger(in.ideal, MonomialOrder::graded_revlex());
    auto hf = hilbert_function(gb, m);
    std::optional<HilbertPolynomial> p = in.hilbert_polynomial;
    if (!o.hilbert_poly.empty()) p = parse_hilbert_polynomial(o.hilbert_poly);
    Json j;
    j["kind"] = "hilbert-function";
    j["m"] = std::to_string(m);
    j["hilbert_function"] = json_of(hf);
    std::string text = "HF(" + std::to_string(m) + ") = " + to_string(hf) + "\n";
    if (p) {
        auto pv = (*p)(Rational(static_cast<long>(m)));
        auto probe = regularity_probe(gb, *p, m);
        j["hilbert_polynomial"] = p->to_string();
        j["hilbert_polynomial_value"] = json_of(pv);
        j["regularity_probe"] = probe ? Json(*probe) : Json(nullptr);
        text += "P(" + std::to_string(m) + ") = " + to_string(pv) + " for P = " + p->to_string() + "\n";
        text += probe ? "HF = P on [" + std::to_string(*probe) + ", " + std::to_string(m) + "]\n"
                      : std::string("HF(m) != P(m): not found\n");
    }
    if (json(o))
        emit(out, j);
    else
        out << text;
}

inline void cmd_gotzmann(const Options& o, std::ostream& out, std::ostream&) {
    if (o.hilbert_poly.empty()) throw std::invalid_argument("--hilbert-poly is required");
    auto p = parse_hilbert_polynomial(o.hilbert_poly);
    auto gz = gotzmann_number(p);
    if (json(o))
        emit(out, {{"kind", "gotzmann"}, {"hilbert_polynomial", p.to_string()}, {"gotzmann_number", gz}});
    else
        out << "Gotzmann number of " << p.to_string() << ": " << gz << "\n";
}

inline void cmd_state_polytope(const Options& o, std::ostream& out, std::ostream& err) {
    auto in = ideal_input(o);
    auto m = need_integral_m(o);
    gotzmann_warning(in.hilbert_polynomial, m, err);
    auto p = state_polytope(in.ideal, m, polytope_options(o));
    if (json(o)) {
        emit(out, json_of(p, in.ideal.ring));
        return;
    }
    out << "state polytope at m = " << m << ": " << p.vertices.size() << " vertices"
        << (p.certified ? " (traversal complete)" : "") << "\n";
    for (const auto& v : p.vertices) out << "  " << vec_string(v) << "\n";
}

inline void cmd_is_semistable(const Options& o, std::ostream& out, std::ostream& err) {
    auto in = ideal_input(o);
    auto m = need_integral_m(o);
    gotzmann_warning(in.hilbert_polynomial, m, err);
    SemistabilityOptions so;
    so.polytope = polytope_options(o);
    if (!o.stabilizer.empty())
        so.kempf = KempfHypothesis{parse_weights(o.stabilizer).weights()};
    else
        so.kempf = in.stabilizer;
    auto t = is_torus_semistable(in.ideal, m, so);
    if (json(o)) {
        emit(out, json_of(t, in.ideal.ring));
        return;
    }
    std::vector<std::string> bary;
    for (const auto& x : t.barycenter) bary.push_back(to_string(x));
    out << to_string(t.verdict) << "\n";
    out << "barycenter (" << joined(bary) << ")\n";
    out << t.polytope.vertices.size() << " vertices\n";
    for (const auto& v : t.polytope.vertices) out << "  " << vec_string(v) << "\n";
    if (t.verdict == TorusVerdict::Semistable) {
        out << "certificate: barycenter =";
        for (std::size_t k = 0; k < t.combination.size(); ++k)
            out << (k ? " +" : "") << " " << to_string(t.combination[k].weight) << " * v" << t.combination[k].vertex;
        out << "\n";
    } else {
        const auto& r = *t.destabilizing;
        out << "destabilizing rho (" << to_string(r.rho) << "), index " << to_string(r.index) << "\n";
    }
    if (t.kempf) {
        out << "stabilizer weights: " << (t.kempf->applicable ? "distinct" : t.kempf->reason)
            << "; fixes ideal: " << (t.stabilizer_fixes_ideal ? "yes" : "no") << "\n";
        out << (t.full_semistability ? "torus test extends to full SL semistability\n"
                                     : "torus test only (no Kempf reduction)\n");
    }
}

inline void cmd_hm_index(const Options& o, std::ostream& out, std::ostream& err) {
    auto in = ideal_input(o);
    auto m = need_m(o);
    if (o.rho.empty()) throw std::invalid_argument("--rho is required");
    auto rho = parse_weights(o.rho);
    auto mi = hstab::detail::integral_degree(m);
    auto tie = MonomialOrder::parse(o.order.empty() ? "glex" : o.order);
    if (o.order.rfind("weighted", 0) == 0) throw std::invalid_argument("--order for hm-index is the tie-break: glex or grevlex");
    std::optional<HilbertPolynomial> p = in.hilbert_polynomial;
    if (!o.hilbert_poly.empty()) p = parse_hilbert_polynomial(o.hilbert_poly);
    std::string p_source = "given";
    if (!p) {
        // no Hilbert polynomial known: use HF(m)
        auto gb = buchberger(in.ideal, MonomialOrder::graded_revlex());
        p = HilbertPolynomial({Rational(hilbert_function(gb, mi))});
        p_source = "HF(m)";
    }
    gotzmann_warning(p_source == "given" ? p : std::nullopt, mi, err);
    auto r = hilbert_mumford_index(in.ideal, m, rho, *p, tie);
    auto ideal_side = ideal_side_index(in.ideal, mi, rho, *p);
    if (json(o)) {
        auto j = json_of(r);
        j["hilbert_polynomial_source"] = p_source;
        j["ideal_side_index"] = json_of(ideal_side);
        emit(out, j);
        return;
    }
    out << "index " << to_string(r.index) << "\n";
    out << "verdict " << to_string(r.verdict) << "\n";
    out << "order " << r.order << "\n";
    out << "standard weight sum " << to_string(r.standard_weight_sum) << ", average term " << to_string(r.average_term)
        << "\n";
    out << "HF(m) = " << to_string(r.hilbert_function) << ", P(m) = " << to_string(r.hilbert_polynomial_value)
        << (p_source == "HF(m)" ? " (taken from HF)" : "") << "\n";
    if (r.below_regularity) out << "note: HF(m) != P(m), m is below regularity\n";
}

inline void cmd_thickening(const Options& o, std::ostream& out, std::ostream&) {
    auto in = ideal_input(o);
    auto t = thickening_instability(in.ideal, o.coord, o.r_max);
    const auto& var = in.ideal.ring.name(o.coord);
    if (json(o)) {
        Json j;
        j["kind"] = "thickening";
        j["coordinate"] = var;
        j["r"] = t.r;
        j["bound"] = t.bound;
        j["rho"] = json_of(t.rho);
        emit(out, j);
        return;
    }
    if (t.r == 0) {
        out << "no power " << var << "^r with r <= " << o.r_max << " lies in I\n";
        return;
    }
    out << var << "^" << t.r << " in I: unstable for m > " << t.bound << " against rho (" << to_string(t.rho) << ")\n";
}

inline void cmd_lattice_ideal(const Options& o, std::ostream& out, std::ostream&) {
    MonomialCurveSpec spec;
    if (!o.curve.empty() && o.tail) throw std::invalid_argument("give --curve or --tail, not both");
    if (!o.curve.empty())
        spec = parse_curve_spec(read_file(o.curve));
    else if (o.tail)
        spec = tail_curve_spec(static_cast<std::uint32_t>(o.tail)).spec;
    else
        throw std::invalid_argument("--curve <file> or --tail <b> is required");
    auto ideal = lattice_ideal(spec);
    if (json(o)) {
        emit(out, {{"kind", "lattice-ideal"},
                   {"d", spec.d},
                   {"variables", ideal.ring.names()},
                   {"generators", poly_strings(ideal.generators, ideal.ring)}});
        return;
    }
    out << "ideal of the degree-" << spec.d << " monomial curve, " << ideal.generators.size() << " generators:\n"
        << poly_list(ideal.generators, ideal.ring);
}

inline void cmd_tail_index(const Options& o, std::ostream& out, std::ostream&) {
    if (o.b == 0) throw std::invalid_argument("--b is required");
    auto m = need_m(o);
    auto closed = tail_index_closed_form(o.b, m);
    Json j;
    j["kind"] = "tail-index";
    j["b"] = o.b;
    j["m"] = json_of(m);
    j["index"] = json_of(closed.value);
    j["verdict"] = to_string(closed.verdict);
    j["threshold"] = json_of(closed.threshold);
    std::string text = "closed form index " + to_string(closed.value) + " (" + to_string(closed.verdict) +
                       "); negative for 1 < m < " + to_string(closed.threshold) + "\n";
    if (o.g) {
        auto mi = hstab::detail::integral_degree(m);
        Integer wr = o.wr.empty() ? tail_weight_sum(static_cast<std::uint32_t>(o.b), mi) : Integer(o.wr);
        auto a = tail_index_assembled({o.g, o.b, m}, wr);
        j["g"] = o.g;
        j["assembled"] = {{"r", json_of(a.weight_total)},
                          {"N+1", a.ambient},
                          {"P(m)", json_of(a.p_value)},
                          {"average", json_of(a.average)},
                          {"w_R", json_of(a.tail_weight)},
                          {"w_D", json_of(a.complement_weight)},
                          {"index", json_of(a.index)}};
        text += "assembled for g = " + std::to_string(o.g) + ": w_R = " + to_string(a.tail_weight) +
                ", w_D = " + to_string(a.complement_weight) + ", index " + to_string(a.index) + " (agrees)\n";
    }
    if (json(o))
        emit(out, j);
    else
        out << text;
}

inline void cmd_characters(const Options& o, std::ostream& out, std::ostream&) {
    if (o.b == 0) throw std::invalid_argument("--b is required");
    auto t = tail_characters(o.b);
    if (json(o)) {
        Json j = json_of(t);
        j["b"] = o.b;
        emit(out, j);
        return;
    }
    out << "chi_lambda = " << to_string(t.lambda()) << "\nchi_lambda2 = " << to_string(t.lambda2())
        << "\nchi_delta = " << to_string(t.delta()) << "\nchi_K = " << to_string(t.canonical()) << "\n";
}

inline void cmd_alpha_m(const Options& o, std::ostream& out, std::ostream&) {
    if (o.m.empty() == o.alpha.empty()) throw std::invalid_argument("give exactly one of --m or --alpha");
    Rational m, alpha;
    if (!o.m.empty()) {
        m = parse_rational(o.m);
        if (m <= 0) throw std::invalid_argument("m must be positive");
        alpha = alpha_of_m(m);
    } else {
        alpha = parse_rational(o.alpha);
        m = m_of_alpha(alpha);
    }
    auto cls = linearization_class(m > 0 ? m : Rational(1), 2, 2);
    if (json(o)) {
        Json j;
        j["kind"] = "alpha-m";
        j["m"] = json_of(m);
        j["alpha"] = json_of(alpha);
        if (m > 0) j["bicanonical_class"] = json_of(cls);
        emit(out, j);
        return;
    }
    if (!o.m.empty())
        out << "alpha = " << to_string(alpha) << "\n";
    else
        out << "m = " << to_string(m) << "\n";
    if (m > 0) out << "bicanonical Hilbert class ~ " << to_string(cls.normalized()) << "\n";
}

inline DeformationChart chart_input(const std::string& spec) {
    if (spec == "tacnode") return tacnode_chart();
    if (spec.rfind("cusp:", 0) == 0) {
        auto rest = spec.substr(5);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad chart '" + spec + "'");
        return cusp_tail_chart(std::stoll(rest));
    }
    return parse_chart(read_file(spec));
}

inline void cmd_chambers(const Options& o, std::ostream& out, std::ostream&) {
    if (o.chart.empty()) throw std::invalid_argument("--chart <file|tacnode|cusp:b> is required");
    auto c = chamber_decomposition(chart_input(o.chart));
    if (json(o)) {
        Json j{{"kind", "chambers"}};
        j.update(json_of(c));
        emit(out, j);
        return;
    }
    out << "T \\ T- = V(" << joined(c.negative_complement) << ")\n";
    out << "T \\ T+ = V(" << joined(c.positive_complement) << ")\n";
    out << "attracted: " << joined(c.attracted) << "\n";
    out << "fixed tangent: " << joined(c.fixed_tangent) << "\n";
}

inline void cmd_example(const Options& o, std::ostream& out, std::ostream&) {
    if (o.name.empty()) {
        auto names = example_names();
        if (json(o))
            emit(out, {{"kind", "example-list"}, {"examples", names}});
        else
            for (const auto& n : names) out << n << "\n";
        return;
    }
    auto ex = named_example(o.name);
    if (json(o)) {
        Json j;
        j["kind"] = "example";
        j["name"] = ex.name;
        j["variables"] = ex.ideal.ring.names();
        j["generators"] = poly_strings(ex.ideal.generators, ex.ideal.ring);
        j["hilbert_polynomial"] = ex.hilbert_polynomial.to_string();
        j["stabilizer"] = ex.stabilizer ? Json(ex.stabilizer->stabilizer_weights) : Json(nullptr);
        j["rho"] = ex.distinguished_rho ? json_of(*ex.distinguished_rho) : Json(nullptr);
        j["expectation"] = ex.expectation;
        emit(out, j);
        return;
    }
    out << ex.name << "\nvariables: " << joined(ex.ideal.ring.names(), " ") << "\n"
        << "generators:\n"
        << poly_list(ex.ideal.generators, ex.ideal.ring) << "P(m) = " << ex.hilbert_polynomial.to_string() << "\n";
    if (ex.distinguished_rho) out << "rho: (" << to_string(*ex.distinguished_rho) << ")\n";
    out << "expected: " << ex.expectation << "\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Groebner, state-polytope and Hilbert-Mumford computations for Hilbert points of curves"};
    app.name("hstab");
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<void(const Options&, std::ostream&, std::ostream&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;

    auto add = [&](const char* name, const char* help, Handler h) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        commands.emplace_back(sub, std::move(h));
        return sub;
    };
    auto ideal_flags = [&](CLI::App* s) {
        s->add_option("--ideal", o.ideal, "ideal file or example name");
        s->add_option("--example", o.example, "example name");
    };
    auto polytope_flags = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "seed for random traversal restarts");
        s->add_option("--threads", o.threads, "worker threads for the traversal")->check(CLI::PositiveNumber);
        s->add_option("--restarts", o.restarts, "random restart weights");
    };

    auto* s = add("groebner", "reduced Groebner basis", detail::cmd_groebner);
    ideal_flags(s);
    s->add_option("--order", o.order, "glex, grevlex or weighted:<w>:<tiebreak>");

    s = add("initial-ideal", "initial ideal, optionally its degree-m piece", detail::cmd_initial_ideal);
    ideal_flags(s);
    s->add_option("--order", o.order, "glex, grevlex or weighted:<w>:<tiebreak>");
    s->add_option("--m", o.m, "degree");

    s = add("hilbert-function", "HF(m), with P(m) and a regularity probe when P is known", detail::cmd_hilbert_function);
    ideal_flags(s);
    s->add_option("--m", o.m, "degree")->required();
    s->add_option("--hilbert-poly", o.hilbert_poly, "Hilbert polynomial in m");

    s = add("gotzmann", "Gotzmann number of a Hilbert polynomial", detail::cmd_gotzmann);
    s->add_option("--hilbert-poly", o.hilbert_poly, "Hilbert polynomial in m")->required();

    s = add("state-polytope", "degree-m state polytope", detail::cmd_state_polytope);
    ideal_flags(s);
    s->add_option("--m", o.m, "degree")->required();
    polytope_flags(s);

    s = add("is-semistable", "torus semistability of the m-th Hilbert point", detail::cmd_is_semistable);
    ideal_flags(s);
    s->add_option("--m", o.m, "degree")->required();
    s->add_option("--stabilizer", o.stabilizer, "stabilizer 1-PS weights for the Kempf reduction");
    polytope_flags(s);

    s = add("hm-index", "Hilbert-Mumford index against a 1-PS", detail::cmd_hm_index);
    ideal_flags(s);
    s->add_option("--m", o.m, "degree")->required();
    s->add_option("--rho", o.rho, "comma-separated integer weights")->required();
    s->add_option("--order", o.order, "tie-break: glex (default) or grevlex");
    s->add_option("--hilbert-poly", o.hilbert_poly, "Hilbert polynomial in m (default: from the input, else HF(m))");

    s = add("thickening", "instability of a thickened hyperplane", detail::cmd_thickening);
    ideal_flags(s);
    s->add_option("--coord", o.coord, "coordinate index");
    s->add_option("--r-max", o.r_max, "largest power tried");

    s = add("lattice-ideal", "ideal of a monomial curve", detail::cmd_lattice_ideal);
    s->add_option("--curve", o.curve, "curve spec file");
    s->add_option("--tail", o.tail, "genus of a monomial A_2b tail");

    s = add("tail-index", "Hilbert-Mumford index of a cuspidal tail", detail::cmd_tail_index);
    s->add_option("--b", o.b, "tail genus")->required();
    s->add_option("--m", o.m, "degree (p/q allowed)")->required();
    s->add_option("--g", o.g, "total genus; assembles the index from w_R");
    s->add_option("--wr", o.wr, "w_R(m) (default: computed)");

    s = add("characters", "characters of the tail automorphism", detail::cmd_characters);
    s->add_option("--b", o.b, "tail genus")->required();

    s = add("alpha-m", "alpha <-> m for bicanonical Hilbert points", detail::cmd_alpha_m);
    s->add_option("--m", o.m, "m (p/q allowed)");
    s->add_option("--alpha", o.alpha, "alpha (p/q allowed)");

    s = add("chambers", "chamber complements of a G_m action", detail::cmd_chambers);
    s->add_option("--chart", o.chart, "chart file, tacnode or cusp:<b>");

    s = add("example", "list or describe catalogue examples", detail::cmd_example);
    s->add_option("--name", o.name, "example name");

    std::vector<std::string> argv_store{"hstab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto& [sub, h] : commands)
            if (sub->parsed()) h(o, out, err);
        return 0;
    } catch (const ParseError& e) {
        err << "error: parse error, " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hstab::cli

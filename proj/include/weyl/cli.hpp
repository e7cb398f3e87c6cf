#pragma once

#include "weyl/json_io.hpp"
#include "weyl/one_form.hpp"
#include "weyl/profile.hpp"
#include "weyl/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace weyl::cli {

// ---- input plumbing ---------------------------------------------------------

inline json load_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) raise(Errc::usage_error, "cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::parse_error, (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

inline Integer parse_integer_arg(const std::string& s, const std::string& opt) {
    try {
        return Integer(s);
    } catch (const std::runtime_error&) {
        raise(Errc::usage_error, opt + ": '" + s + "' is not an integer");
    }
}

inline std::vector<Integer> parse_primes(const std::vector<std::string>& in, const std::string& opt) {
    if (in.empty()) raise(Errc::usage_error, opt + ": needs at least one prime");
    std::vector<Integer> out;
    for (const auto& s : in) out.push_back(parse_integer_arg(s, opt));
    return out;
}

// ---- plain-text rendering ---------------------------------------------------

inline std::vector<std::string> weyl_names(std::uint32_t n) {
    std::vector<std::string> v;
    for (std::uint32_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    for (std::uint32_t i = 1; i <= n; ++i) v.push_back("eta" + std::to_string(i));
    return v;
}

inline std::vector<std::string> var_names(std::uint32_t k, const char* prefix) {
    std::vector<std::string> v;
    for (std::uint32_t i = 1; i <= k; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

inline std::string coeff_str(const Ring& ring, const RingValue& v) {
    switch (ring.kind()) {
        case RingKind::poly_over_fp: {
            const auto& f = std::get<FpPoly>(v);
            if (f.coeffs.empty()) return "0";
            std::string s;
            for (const auto& [e, c] : f.coeffs) {
                if (!s.empty()) s += " + ";
                if (e == 0) {
                    s += c.str();
                    continue;
                }
                if (c != 1) s += c.str() + "*";
                s += ring.variable();
                if (e > 1) s += "^" + std::to_string(e);
            }
            return f.coeffs.size() > 1 ? "(" + s + ")" : s;
        }
        case RingKind::rationals: {
            const auto& q = std::get<Rational>(v);
            if (denominator(q) == 1) return numerator(q).str();
            return numerator(q).str() + "/" + denominator(q).str();
        }
        default: return std::get<Integer>(v).str();
    }
}

inline std::string monomial_str(const std::vector<std::string>& names, const MultiIndex& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

template <typename Terms>
std::string terms_str(const Ring& ring, const Terms& terms, const std::vector<std::string>& names) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms) {
        if (!s.empty()) s += " + ";
        const std::string mono = monomial_str(names, e);
        const std::string coeff = coeff_str(ring, c);
        if (mono.empty())
            s += coeff;
        else if (coeff == "1")
            s += mono;
        else
            s += coeff + "*" + mono;
    }
    return s;
}

inline std::vector<std::string> endo_lines(const WeylEndo& f) {
    const auto names = weyl_names(f.n());
    std::vector<std::string> out;
    for (std::uint32_t i = 0; i < 2 * f.n(); ++i)
        out.push_back(names[i] + " -> " + terms_str(f.ring(), f.images()[i].terms(), names));
    return out;
}

inline std::vector<std::string> poly_map_lines(const PolyMap& g, const char* prefix) {
    const auto names = var_names(2 * g.n, prefix);
    std::vector<std::string> out;
    for (std::uint32_t i = 0; i < 2 * g.n; ++i)
        out.push_back(names[i] + " -> " + terms_str(g.ring, g.images[i].terms(), names));
    return out;
}

inline std::string pass_str(bool b) { return b ? "pass" : "FAIL"; }

inline void emit(const json& report, const std::string& format,
                 const std::vector<std::string>& lines) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& l : lines) std::cout << l << "\n";
}

// ---- subcommands ------------------------------------------------------------

inline int cmd_normalize(const std::string& input, const std::string& format) {
    json j = load_json(input);
    if (!j.is_object() || !j.contains("terms"))
        raise(Errc::usage_error, "input: expected an element object with a \"terms\" field");
    if (j.contains("n")) {
        WeylElement a = weyl_from_json(j);
        emit(weyl_to_json(a), format, {terms_str(a.ring(), a.terms(), weyl_names(a.n()))});
        return 0;
    }
    if (j.contains("nvars")) {
        PolyElement a = poly_from_json(j);
        emit(poly_to_json(a), format, {terms_str(a.ring(), a.terms(), var_names(a.nvars(), "x"))});
        return 0;
    }
    raise(Errc::usage_error, "input: needs \"n\" (Weyl element) or \"nvars\" (polynomial)");
}

inline int cmd_mul(const std::string& pa, const std::string& pb, const std::string& format) {
    json ja = load_json(pa), jb = load_json(pb);
    const bool aw = ja.is_object() && ja.contains("n");
    const bool bw = jb.is_object() && jb.contains("n");
    if (aw != bw) raise(Errc::usage_error, "inputs: cannot mix Weyl and polynomial elements");
    if (aw) {
        WeylElement r = weyl_from_json(ja, pa) * weyl_from_json(jb, pb);
        emit(weyl_to_json(r), format, {terms_str(r.ring(), r.terms(), weyl_names(r.n()))});
        return 0;
    }
    if (ja.is_object() && ja.contains("nvars")) {
        PolyElement r = poly_from_json(ja, pa) * poly_from_json(jb, pb);
        emit(poly_to_json(r), format, {terms_str(r.ring(), r.terms(), var_names(r.nvars(), "x"))});
        return 0;
    }
    raise(Errc::usage_error, "input: needs \"n\" (Weyl element) or \"nvars\" (polynomial)");
}

inline int cmd_commutator(const std::string& pa, const std::string& pb, const std::string& format) {
    WeylElement r = commutator(weyl_from_json(load_json(pa), pa), weyl_from_json(load_json(pb), pb));
    emit(weyl_to_json(r), format, {terms_str(r.ring(), r.terms(), weyl_names(r.n()))});
    return 0;
}

inline int cmd_apply_endo(const std::string& pf, const std::string& pa, const std::string& format) {
    WeylEndo f = endo_from_json(load_json(pf), pf);
    WeylElement r = apply_endo(f, weyl_from_json(load_json(pa), pa));
    emit(weyl_to_json(r), format, {terms_str(r.ring(), r.terms(), weyl_names(r.n()))});
    return 0;
}

inline int cmd_verify_endo(const std::string& input, const std::string& format) {
    WeylEndo f = endo_from_json(load_json(input), input);
    EndoReport r = verify_endo(f);
    std::vector<std::string> lines;
    lines.push_back("relations: " + pass_str(r.relations_ok) +
                    (r.defects.empty() ? "" : " (" + std::to_string(r.defects.size()) + " defects)"));
    lines.push_back(std::string("inverse: ") +
                    (r.inverse_checked ? (r.inverse_ok ? "checked, pass" : "checked, FAIL")
                                       : "not claimed"));
    lines.push_back("verdict: " + pass_str(r.pass()));
    emit(endo_report_to_json(r, f.ring()), format, lines);
    return r.pass() ? 0 : 1;
}

inline int cmd_center_map(const std::string& input, const std::string& format) {
    WeylEndo f = endo_from_json(load_json(input), input);
    CenterMap m = center_map(f);
    DegreeReport d = degree_check(m);
    json out;
    out["center_map"] = center_map_to_json(m);
    out["degree"] = degree_report_to_json(d);
    std::vector<std::string> lines = poly_map_lines(m.map, "y");
    lines.push_back("degree bound " + std::to_string(d.bound) + ": " + pass_str(d.pass));
    emit(out, format, lines);
    return d.pass ? 0 : 1;
}

inline int cmd_center_bracket(const std::string& pa, const std::string& pb,
                              const std::string& format) {
    PolyElement a = poly_from_json(load_json(pa), pa);
    PolyElement b = poly_from_json(load_json(pb), pb);
    if (a.ring().kind() != RingKind::prime_field)
        raise(Errc::usage_error, "ring: center brackets need F_p coefficients");
    if (a.nvars() == 0 || a.nvars() % 2 != 0)
        raise(Errc::usage_error, "nvars: center coordinates come in pairs (2n variables)");
    PolyElement r = center_poisson_bracket(a, b, a.nvars() / 2, a.ring().modulus());
    emit(poly_to_json(r), format, {terms_str(r.ring(), r.terms(), var_names(r.nvars(), "y"))});
    return 0;
}

inline int cmd_untwist(const std::string& input, const std::string& format) {
    CenterMap m = center_map_from_json(load_json(input), input);
    CenterMap u = untwist_frobenius_map(m);
    emit(center_map_to_json(u), format, poly_map_lines(u.map, "y"));
    return 0;
}

inline bool profile_pass(const PrimeProfile& prof) {
    for (const auto& e : prof.primes)
        if (!e.error.empty() || !e.degree_ok) return false;
    return prof.reconstruction && prof.reconstruction->error.empty() &&
           prof.reconstruction->agrees;
}

inline int cmd_psi_profile(const std::string& input, const std::vector<std::string>& primes_raw,
                           const std::string& format) {
    WeylEndo f = endo_from_json(load_json(input), input);
    PrimeProfile prof = psi_profile(f, parse_primes(primes_raw, "--primes"));
    std::vector<std::string> lines;
    for (const auto& e : prof.primes)
        lines.push_back("p=" + e.p.str() + ": " +
                        (e.error.empty() ? "center map ok, degree " +
                                               std::string(e.degree_ok ? "ok" : "FAIL")
                                         : e.error));
    if (prof.reconstruction) {
        if (!prof.reconstruction->error.empty())
            lines.push_back("reconstruction: " + prof.reconstruction->error);
        else {
            std::string cps;
            for (const Integer& p : prof.reconstruction->check_primes)
                cps += (cps.empty() ? "" : ", ") + p.str();
            lines.push_back(std::string("reconstruction: ") +
                            (prof.reconstruction->agrees ? "agrees" : "DISAGREES") +
                            " at check primes " + cps);
        }
    } else {
        lines.push_back("reconstruction: none");
    }
    const bool pass = profile_pass(prof);
    lines.push_back("verdict: " + pass_str(pass));
    emit(profile_to_json(prof), format, lines);
    return pass ? 0 : 1;
}

inline int cmd_tame_eval(const std::string& input, const std::string& target,
                         const std::string& format) {
    TameWord w = word_from_json(load_json(input), input);
    if (target == "weyl") {
        WeylEndo f = eval_word_weyl(w);
        emit(endo_to_json(f), format, endo_lines(f));
        return 0;
    }
    if (target == "poisson") {
        PolyMap g = eval_word_poisson(w);
        emit(poly_map_to_json(g), format, poly_map_lines(g, "x"));
        return 0;
    }
    CenterMap m = center_map(eval_word_weyl(w));
    DegreeReport d = degree_check(m);
    json out;
    out["center_map"] = center_map_to_json(m);
    out["degree"] = degree_report_to_json(d);
    std::vector<std::string> lines = poly_map_lines(m.map, "y");
    lines.push_back("degree bound " + std::to_string(d.bound) + ": " + pass_str(d.pass));
    emit(out, format, lines);
    return d.pass ? 0 : 1;
}

inline int cmd_tame_correspond(const std::string& input, const std::vector<std::string>& primes_raw,
                               const std::string& format) {
    TameWord w = word_from_json(load_json(input), input);
    CorrespondenceReport rep = correspondence_check(w, parse_primes(primes_raw, "--primes"));
    json out = correspondence_to_json(rep);
    std::vector<std::string> lines;
    for (const auto& entry : out.at("primes")) {
        std::string line = "p=" + entry.at("p").get<std::string>() + ": " +
                           pass_str(entry.at("pass").get<bool>());
        if (entry.contains("error")) line += " (" + entry.at("error").get<std::string>() + ")";
        else if (!entry.at("pass").get<bool>()) {
            for (const auto& [k, v] : entry.at("verdict").items())
                if (!v.get<bool>()) line += " " + k;
        }
        lines.push_back(std::move(line));
    }
    lines.push_back("verdict: " + pass_str(rep.pass()));
    emit(out, format, lines);
    return rep.pass() ? 0 : 1;
}

inline int cmd_kernel_evidence(const std::string& input, const std::vector<std::string>& primes_raw,
                               const std::string& format) {
    TameWord w = word_from_json(load_json(input), input);
    KernelReport rep = kernel_evidence(w, parse_primes(primes_raw, "--primes"));
    bool pass = rep.kernels_agree();
    for (const auto& e : rep.primes)
        if (!e.error.empty() || e.untwisted_identity != e.poisson_identity) pass = false;
    std::vector<std::string> lines;
    lines.push_back(std::string("weyl action: ") +
                    (rep.weyl_identity
                         ? "identity"
                         : "moves generator " + std::to_string(*rep.weyl_witness + 1)));
    lines.push_back(std::string("poisson action: ") +
                    (rep.poisson_identity
                         ? "identity"
                         : "moves generator " + std::to_string(*rep.poisson_witness + 1)));
    for (const auto& e : rep.primes)
        lines.push_back("p=" + e.p.str() + ": " +
                        (e.error.empty()
                             ? "center " + std::string(e.center_identity ? "id" : "non-id") +
                                   ", untwisted " + (e.untwisted_identity ? "id" : "non-id") +
                                   ", poisson " + (e.poisson_identity ? "id" : "non-id")
                             : e.error));
    lines.push_back("kernels agree: " + pass_str(pass));
    emit(kernel_to_json(rep), format, lines);
    return pass ? 0 : 1;
}

inline int cmd_primitive(const std::string& input, const std::string& format) {
    PolyOneForm theta = one_form_from_json(load_json(input), input);
    PolyElement p = primitive_of_exact(theta);
    json out;
    out["primitive"] = poly_to_json(p);
    emit(out, format, {"P = " + terms_str(p.ring(), p.terms(), var_names(p.nvars(), "x"))});
    return 0;
}

inline int cmd_azumaya_verify(const std::string& input, bool triple, const std::string& format) {
    json j = load_json(input);
    if (triple) {
        PolyElement f = poly_from_json(member(j, "f", input), input + "/f");
        PolyElement g = poly_from_json(member(j, "g", input), input + "/g");
        PolyElement h = poly_from_json(member(j, "h", input), input + "/h");
        if (f.ring().kind() != RingKind::prime_field)
            raise(Errc::usage_error, "f/ring: triple parameters need F_p coefficients");
        TripleReport rep = verify_triple_iso(f, g, h, f.ring().modulus());
        json out = triple_report_to_json(rep);
        std::vector<std::string> lines;
        for (const char* which : {"displayed", "listed"}) {
            const json& r = out.at(which);
            lines.push_back(std::string(which) + " reading: structural " +
                            pass_str(r.at("structural_pass").get<bool>()) +
                            (r.at("sign_clean").get<bool>() ? ", signs exact"
                                                            : ", sign flips present"));
            for (const auto& rel : r.at("relations"))
                lines.push_back("  " + rel.at("relation").get<std::string>() + ": " +
                                rel.at("verdict").get<std::string>());
        }
        emit(out, format, lines);
        return rep.displayed.structural_pass ? 0 : 1;
    }
    SubstitutionMap m = substitution_from_json(j, input);
    SubstReport rep = verify_substitution(m);
    json out = subst_report_to_json(rep);
    std::vector<std::string> lines;
    for (const auto& c : out.at("checks"))
        lines.push_back(c.at("relation").get<std::string>() + ": " +
                        pass_str(c.at("pass").get<bool>()));
    lines.push_back("verdict: " + pass_str(rep.pass));
    emit(out, format, lines);
    return rep.pass ? 0 : 1;
}

inline int cmd_matrix_rep(const std::string& p_raw, const std::string& format) {
    MatrixRepReport rep = matrix_rep(parse_integer_arg(p_raw, "--p"));
    std::vector<std::string> lines;
    lines.push_back("p=" + rep.x.p.str() + ", dim " + std::to_string(rep.x.dim));
    lines.push_back("[D, X] = I: " + pass_str(rep.commutator_is_identity));
    lines.push_back("X^p = 0: " + pass_str(rep.x_pth_power_zero));
    lines.push_back("D^p = 0: " + pass_str(rep.d_pth_power_zero));
    lines.push_back("monomial span rank " + std::to_string(rep.span_rank) + "/" +
                    std::to_string(rep.x.dim * rep.x.dim) + ": " + pass_str(rep.full_span));
    lines.push_back("verdict: " + pass_str(rep.pass()));
    emit(matrix_rep_to_json(rep), format, lines);
    return rep.pass() ? 0 : 1;
}

inline int cmd_identity_suite(SuiteConfig cfg, const std::vector<std::string>& primes_raw,
                              const std::vector<std::uint32_t>& ns, const std::string& out_path,
                              const std::string& format) {
    cfg.primes = parse_primes(primes_raw, "--primes");
    cfg.ns = ns;
    if (const char* env = std::getenv("WEYL_WORKERS")) {
        try {
            std::size_t pos = 0;
            const unsigned long v = std::stoul(env, &pos);
            if (pos != std::string(env).size() || v == 0 || v > 0xfffffffful)
                throw std::invalid_argument("range");
            cfg.workers = static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
            raise(Errc::usage_error,
                  "WEYL_WORKERS: '" + std::string(env) + "' is not a worker count");
        }
    }
    SuiteReport rep = run_identity_suite(cfg);
    json out = suite_report_to_json(rep);
    if (!out_path.empty()) {
        std::ofstream o(out_path);
        if (!o) raise(Errc::usage_error, "cannot write report file: " + out_path);
        o << out.dump(2) << "\n";
    }
    std::vector<std::string> lines;
    std::string ps;
    for (const Integer& p : rep.config.primes) ps += (ps.empty() ? "" : ",") + p.str();
    std::string nss;
    for (std::uint32_t n : rep.config.ns) nss += (nss.empty() ? "" : ",") + std::to_string(n);
    lines.push_back("seed " + std::to_string(rep.config.seed) + ", primes " + ps + ", n " + nss +
                    ", samples " + std::to_string(rep.config.samples));
    for (const SuiteBlock& b : rep.blocks) {
        std::string pad(b.name.size() < 22 ? 22 - b.name.size() : 1, ' ');
        lines.push_back(b.name + pad + pass_str(b.pass));
    }
    lines.push_back("suite: " + pass_str(rep.pass));
    emit(out, format, lines);
    return rep.pass ? 0 : 1;
}

// ---- driver -----------------------------------------------------------------

inline int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for Weyl and Poisson algebras: reductions mod p, center "
                 "maps, tame words, Azumaya presentations"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format (default text)")
            ->check(CLI::IsMember({"json", "text"}));
    };

    int rc = 0;

    std::string in_a = "-", in_b = "-";
    std::vector<std::string> primes_raw;
    std::string target = "weyl";
    bool triple = false;
    std::string p_raw;
    SuiteConfig cfg;
    std::vector<std::uint32_t> ns = cfg.ns;
    std::vector<std::string> suite_primes = {"3", "5"};
    std::string out_path;

    auto* c_norm = app.add_subcommand("normalize", "parse an element and re-emit it canonically");
    c_norm->add_option("input", in_a, "element JSON file, or - for stdin");
    add_format(c_norm);
    c_norm->callback([&] { rc = cmd_normalize(in_a, format); });

    auto* c_mul = app.add_subcommand("mul", "product of two elements (Weyl or polynomial)");
    c_mul->add_option("a", in_a, "left factor JSON")->required();
    c_mul->add_option("b", in_b, "right factor JSON")->required();
    add_format(c_mul);
    c_mul->callback([&] { rc = cmd_mul(in_a, in_b, format); });

    auto* c_comm = app.add_subcommand("commutator", "[a, b] of two Weyl elements");
    c_comm->add_option("a", in_a, "left JSON")->required();
    c_comm->add_option("b", in_b, "right JSON")->required();
    add_format(c_comm);
    c_comm->callback([&] { rc = cmd_commutator(in_a, in_b, format); });

    auto* c_apply = app.add_subcommand("apply-endo", "substitute generator images into an element");
    c_apply->add_option("endo", in_a, "endomorphism JSON")->required();
    c_apply->add_option("element", in_b, "Weyl element JSON")->required();
    add_format(c_apply);
    c_apply->callback([&] { rc = cmd_apply_endo(in_a, in_b, format); });

    auto* c_verify = app.add_subcommand("verify-endo", "check commutation relations and any "
                                                       "claimed inverse");
    c_verify->add_option("input", in_a, "endomorphism JSON, or - for stdin");
    add_format(c_verify);
    c_verify->callback([&] { rc = cmd_verify_endo(in_a, format); });

    auto* c_cmap = app.add_subcommand("center-map", "restriction of an endomorphism to the "
                                                    "center via honest p-th powers");
    c_cmap->add_option("input", in_a, "endomorphism JSON over a char-p ring, or - for stdin");
    add_format(c_cmap);
    c_cmap->callback([&] { rc = cmd_center_map(in_a, format); });

    auto* c_cbr = app.add_subcommand("center-bracket", "intrinsic Poisson bracket of two center "
                                                       "elements in y-coordinates");
    c_cbr->add_option("a", in_a, "center element JSON over F_p")->required();
    c_cbr->add_option("b", in_b, "center element JSON over F_p")->required();
    add_format(c_cbr);
    c_cbr->callback([&] { rc = cmd_center_bracket(in_a, in_b, format); });

    auto* c_untw = app.add_subcommand("untwist", "strip the coefficient Frobenius from a center "
                                                 "map");
    c_untw->add_option("input", in_a, "center map JSON, or - for stdin");
    add_format(c_untw);
    c_untw->callback([&] { rc = cmd_untwist(in_a, format); });

    auto* c_psi = app.add_subcommand("psi-profile", "per-prime center maps plus rational "
                                                    "reconstruction over the listed primes");
    c_psi->add_option("input", in_a, "endomorphism JSON over Z or Q, or - for stdin");
    c_psi->add_option("--primes", primes_raw, "comma-separated odd primes")
        ->required()
        ->delimiter(',');
    add_format(c_psi);
    c_psi->callback([&] { rc = cmd_psi_profile(in_a, primes_raw, format); });

    auto* c_eval = app.add_subcommand("tame-eval", "evaluate a tame word");
    c_eval->add_option("input", in_a, "word JSON, or - for stdin");
    c_eval->add_option("--target", target, "weyl, poisson, or center (default weyl)")
        ->check(CLI::IsMember({"weyl", "poisson", "center"}));
    add_format(c_eval);
    c_eval->callback([&] { rc = cmd_tame_eval(in_a, target, format); });

    auto* c_corr = app.add_subcommand("tame-correspond", "center map vs twisted Poisson "
                                                         "evaluation at each prime");
    c_corr->add_option("input", in_a, "word JSON over Z or Q, or - for stdin");
    c_corr->add_option("--primes", primes_raw, "comma-separated odd primes")
        ->required()
        ->delimiter(',');
    add_format(c_corr);
    c_corr->callback([&] { rc = cmd_tame_correspond(in_a, primes_raw, format); });

    auto* c_kern = app.add_subcommand("kernel-evidence", "does the word act trivially on the "
                                                         "Weyl side iff it does on the Poisson "
                                                         "side");
    c_kern->add_option("input", in_a, "word JSON, or - for stdin");
    c_kern->add_option("--primes", primes_raw, "comma-separated odd primes")
        ->required()
        ->delimiter(',');
    add_format(c_kern);
    c_kern->callback([&] { rc = cmd_kernel_evidence(in_a, primes_raw, format); });

    auto* c_prim = app.add_subcommand("primitive", "P with dP = theta for a closed one-form, "
                                                   "normalized by P(0) = 0");
    c_prim->add_option("input", in_a, "one-form JSON, or - for stdin");
    add_format(c_prim);
    c_prim->callback([&] { rc = cmd_primitive(in_a, format); });

    auto* c_az = app.add_subcommand("azumaya-verify", "check a substitution map against the "
                                                      "presentation relations");
    c_az->add_option("input", in_a, "substitution JSON (or {f,g,h} with --triple), or - for stdin");
    c_az->add_flag("--triple", triple, "treat input as the three-factor tensor parameters");
    add_format(c_az);
    c_az->callback([&] { rc = cmd_azumaya_verify(in_a, triple, format); });

    auto* c_mat = app.add_subcommand("matrix-rep", "p x p matrix model of the reduced Weyl "
                                                   "algebra at p");
    c_mat->add_option("--p", p_raw, "prime")->required();
    add_format(c_mat);
    c_mat->callback([&] { rc = cmd_matrix_rep(p_raw, format); });

    auto* c_suite = app.add_subcommand("identity-suite", "seeded verification suite; byte-"
                                                         "identical report for identical config");
    c_suite->add_option("--seed", cfg.seed, "rng seed (default 42)");
    c_suite->add_option("--primes", suite_primes, "comma-separated primes (default 3,5)")
        ->delimiter(',');
    c_suite->add_option("--n", ns, "comma-separated n values (default 1,2)")->delimiter(',');
    c_suite->add_option("--word-len", cfg.word_len, "tame word length cap (default 4)");
    c_suite->add_option("--samples", cfg.samples, "samples per randomized block (default 20)");
    c_suite->add_option("--workers", cfg.workers,
                        "worker threads; WEYL_WORKERS overrides (default 1)");
    c_suite->add_option("--out", out_path, "also write the JSON report to this file");
    add_format(c_suite);
    c_suite->callback([&] { rc = cmd_identity_suite(cfg, suite_primes, ns, out_path, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "UsageError: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "Error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace weyl::cli

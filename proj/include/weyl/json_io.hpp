#pragma once

#include "weyl/azumaya.hpp"
#include "weyl/center.hpp"
#include "weyl/one_form.hpp"
#include "weyl/profile.hpp"
#include "weyl/tame.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace weyl {

// Field order is fixed by insertion, term lists are ascending in the key
// order of the underlying maps, and every big integer rides as a decimal
// string, so serialization is canonical: equal values give equal bytes.
using json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& msg) {
    raise(Errc::parse_error, path.empty() ? msg : path + ": " + msg);
}

inline const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) parse_fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::uint32_t uint_field(const json& j, const std::string& path) {
    // hand-written documents store small literals as signed numbers, so
    // accept both encodings and range-check ourselves
    if (j.is_number_unsigned()) {
        if (j.get<std::uint64_t>() > 0xffffffffull) parse_fail(path, "value out of range");
        return j.get<std::uint32_t>();
    }
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        if (v < 0) parse_fail(path, "expected a nonnegative integer");
        if (v > 0xffffffffll) parse_fail(path, "value out of range");
        return static_cast<std::uint32_t>(v);
    }
    parse_fail(path, "expected a nonnegative integer");
}

inline Integer integer_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) parse_fail(path, "expected a decimal string");
    try {
        return Integer(j.get<std::string>());
    } catch (const std::exception&) {
        parse_fail(path, "not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
}

// ---- rings ----------------------------------------------------------------

inline json ring_to_json(const Ring& r) {
    json j;
    switch (r.kind()) {
        case RingKind::integers: j["kind"] = "Z"; break;
        case RingKind::rationals: j["kind"] = "Q"; break;
        case RingKind::mod_m:
            j["kind"] = "Z/m";
            j["m"] = r.modulus().str();
            break;
        case RingKind::prime_field:
            j["kind"] = "F_p";
            j["p"] = r.modulus().str();
            break;
        case RingKind::poly_over_fp:
            j["kind"] = "F_p[t]";
            j["p"] = r.modulus().str();
            j["var"] = r.variable();
            break;
    }
    return j;
}

inline Ring ring_from_json(const json& j, const std::string& path) {
    const json& k = member(j, "kind", path);
    if (!k.is_string()) parse_fail(path + "/kind", "expected a string");
    const std::string kind = k.get<std::string>();
    try {
        if (kind == "Z") return Ring::integers();
        if (kind == "Q") return Ring::rationals();
        if (kind == "Z/m") return Ring::mod_m(integer_from_json(member(j, "m", path), path + "/m"));
        if (kind == "F_p")
            return Ring::prime_field(integer_from_json(member(j, "p", path), path + "/p"));
        if (kind == "F_p[t]") {
            const json& v = member(j, "var", path);
            if (!v.is_string()) parse_fail(path + "/var", "expected a string");
            return Ring::poly_over_fp(integer_from_json(member(j, "p", path), path + "/p"),
                                      v.get<std::string>());
        }
    } catch (const Error& e) {
        if (e.code() == Errc::parse_error) throw;
        parse_fail(path, e.what());
    }
    parse_fail(path + "/kind", "unknown ring kind \"" + kind + "\"");
}

// ---- coefficients ----------------------------------------------------------

inline json coeff_to_json(const Ring& ring, const RingValue& v) {
    switch (ring.kind()) {
        case RingKind::integers:
        case RingKind::mod_m:
        case RingKind::prime_field: return std::get<Integer>(v).str();
        case RingKind::rationals: {
            const Rational& q = std::get<Rational>(v);
            if (denominator(q) == 1) return numerator(q).str();
            return numerator(q).str() + "/" + denominator(q).str();
        }
        case RingKind::poly_over_fp: {
            json j = json::object();
            for (const auto& [e, c] : std::get<FpPoly>(v).coeffs) j[std::to_string(e)] = c.str();
            return j;
        }
    }
    parse_fail("", "unreachable ring kind");
}

inline RingValue coeff_from_json(const Ring& ring, const json& j, const std::string& path) {
    switch (ring.kind()) {
        case RingKind::integers: return ring.from_integer(integer_from_json(j, path));
        case RingKind::mod_m:
        case RingKind::prime_field: return ring.from_integer(integer_from_json(j, path));
        case RingKind::rationals: {
            if (!j.is_string()) parse_fail(path, "expected \"a\" or \"a/b\"");
            const std::string s = j.get<std::string>();
            const auto slash = s.find('/');
            try {
                if (slash == std::string::npos) return ring.from_rational(Rational(Integer(s)));
                Integer num(s.substr(0, slash));
                Integer den(s.substr(slash + 1));
                if (den == 0) parse_fail(path, "zero denominator");
                return ring.from_rational(Rational(num, den));
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                parse_fail(path, "not a rational: \"" + s + "\"");
            }
        }
        case RingKind::poly_over_fp: {
            if (!j.is_object()) parse_fail(path, "expected an exponent->coefficient object");
            FpPoly p;
            for (const auto& [key, val] : j.items()) {
                std::uint64_t e = 0;
                try {
                    e = std::stoull(key);
                } catch (const std::exception&) {
                    parse_fail(path, "exponent key \"" + key + "\" is not a number");
                }
                Integer c = mod_reduce(integer_from_json(val, path + "/" + key), ring.modulus());
                if (c != 0) p.coeffs[e] = c;
            }
            return p;
        }
    }
    parse_fail(path, "unreachable ring kind");
}

// ---- term lists ------------------------------------------------------------

template <typename TermMap>
inline json terms_to_json(const Ring& ring, const TermMap& terms) {
    if (terms.empty()) return "0";
    json arr = json::array();
    for (const auto& [e, c] : terms) {
        json t;
        t["e"] = json::array();
        for (std::uint32_t v : e) t["e"].push_back(v);
        t["c"] = coeff_to_json(ring, c);
        arr.push_back(std::move(t));
    }
    return arr;
}

inline MultiIndex exponent_from_json(const json& j, std::uint32_t arity, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an exponent array");
    if (j.size() != arity)
        parse_fail(path, "expected " + std::to_string(arity) + " exponents, got " +
                             std::to_string(j.size()));
    MultiIndex e;
    for (std::size_t i = 0; i < j.size(); ++i)
        e.push_back(uint_field(j[i], path + "/" + std::to_string(i)));
    return e;
}

template <typename AddTerm>
inline void terms_from_json(const Ring& ring, std::uint32_t arity, const json& j,
                            const std::string& path, AddTerm&& add) {
    if (j.is_string()) {
        if (j.get<std::string>() == "0") return;
        parse_fail(path, "expected a term array or \"0\"");
    }
    if (!j.is_array()) parse_fail(path, "expected a term array or \"0\"");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string tpath = path + "/" + std::to_string(i);
        const json& t = j[i];
        MultiIndex e = exponent_from_json(member(t, "e", tpath), arity, tpath + "/e");
        add(e, coeff_from_json(ring, member(t, "c", tpath), tpath + "/c"));
    }
}

// ---- elements --------------------------------------------------------------

inline json weyl_to_json(const WeylElement& a) {
    json j;
    j["ring"] = ring_to_json(a.ring());
    j["n"] = a.n();
    j["terms"] = terms_to_json(a.ring(), a.terms());
    return j;
}

inline WeylElement weyl_from_json(const json& j, const std::string& path = "") {
    Ring ring = ring_from_json(member(j, "ring", path), path + "/ring");
    std::uint32_t n = uint_field(member(j, "n", path), path + "/n");
    WeylElement a(ring, n);
    terms_from_json(ring, 2 * n, member(j, "terms", path), path + "/terms",
                    [&](const MultiIndex& e, const RingValue& c) { a.add_term(e, c); });
    return a;
}

inline json poly_to_json(const PolyElement& a) {
    json j;
    j["ring"] = ring_to_json(a.ring());
    j["nvars"] = a.nvars();
    j["terms"] = terms_to_json(a.ring(), a.terms());
    return j;
}

inline PolyElement poly_from_json(const json& j, const std::string& path = "") {
    Ring ring = ring_from_json(member(j, "ring", path), path + "/ring");
    std::uint32_t nvars = uint_field(member(j, "nvars", path), path + "/nvars");
    PolyElement a(ring, nvars);
    terms_from_json(ring, nvars, member(j, "terms", path), path + "/terms",
                    [&](const MultiIndex& e, const RingValue& c) { a.add_term(e, c); });
    return a;
}

// image lists carry bare term arrays; ring and arity come from the parent
inline json weyl_images_to_json(const Ring& ring, const std::vector<WeylElement>& images) {
    json arr = json::array();
    for (const auto& im : images) arr.push_back(terms_to_json(ring, im.terms()));
    return arr;
}

inline std::vector<WeylElement> weyl_images_from_json(const Ring& ring, std::uint32_t n,
                                                      const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an image array");
    std::vector<WeylElement> images;
    for (std::size_t i = 0; i < j.size(); ++i) {
        WeylElement a(ring, n);
        terms_from_json(ring, 2 * n, j[i], path + "/" + std::to_string(i),
                        [&](const MultiIndex& e, const RingValue& c) { a.add_term(e, c); });
        images.push_back(std::move(a));
    }
    return images;
}

inline json poly_images_to_json(const Ring& ring, const std::vector<PolyElement>& images) {
    json arr = json::array();
    for (const auto& im : images) arr.push_back(terms_to_json(ring, im.terms()));
    return arr;
}

inline std::vector<PolyElement> poly_images_from_json(const Ring& ring, std::uint32_t arity,
                                                      const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an image array");
    std::vector<PolyElement> images;
    for (std::size_t i = 0; i < j.size(); ++i) {
        PolyElement a(ring, arity);
        terms_from_json(ring, arity, j[i], path + "/" + std::to_string(i),
                        [&](const MultiIndex& e, const RingValue& c) { a.add_term(e, c); });
        images.push_back(std::move(a));
    }
    return images;
}

// ---- maps ------------------------------------------------------------------

inline json endo_to_json(const WeylEndo& f) {
    json j;
    j["ring"] = ring_to_json(f.ring());
    j["n"] = f.n();
    j["images"] = weyl_images_to_json(f.ring(), f.images());
    j["claimed_inverse"] =
        f.claimed_inverse() ? weyl_images_to_json(f.ring(), *f.claimed_inverse()) : json(nullptr);
    return j;
}

inline WeylEndo endo_from_json(const json& j, const std::string& path = "") {
    Ring ring = ring_from_json(member(j, "ring", path), path + "/ring");
    std::uint32_t n = uint_field(member(j, "n", path), path + "/n");
    std::vector<WeylElement> images =
        weyl_images_from_json(ring, n, member(j, "images", path), path + "/images");
    std::optional<std::vector<WeylElement>> inverse;
    if (auto it = j.find("claimed_inverse"); it != j.end() && !it->is_null())
        inverse = weyl_images_from_json(ring, n, *it, path + "/claimed_inverse");
    return WeylEndo::make(ring, n, std::move(images), std::move(inverse));
}

inline json poly_map_to_json(const PolyMap& m) {
    json j;
    j["ring"] = ring_to_json(m.ring);
    j["n"] = m.n;
    j["images"] = poly_images_to_json(m.ring, m.images);
    j["claimed_inverse"] =
        m.claimed_inverse ? poly_images_to_json(m.ring, *m.claimed_inverse) : json(nullptr);
    return j;
}

inline PolyMap poly_map_from_json(const json& j, const std::string& path = "") {
    Ring ring = ring_from_json(member(j, "ring", path), path + "/ring");
    std::uint32_t n = uint_field(member(j, "n", path), path + "/n");
    PolyMap m{ring, n, {}, std::nullopt};
    m.images = poly_images_from_json(ring, 2 * n, member(j, "images", path), path + "/images");
    if (auto it = j.find("claimed_inverse"); it != j.end() && !it->is_null())
        m.claimed_inverse =
            poly_images_from_json(ring, 2 * n, *it, path + "/claimed_inverse");
    m.validate();
    return m;
}

inline json center_map_to_json(const CenterMap& m) {
    json j;
    j["map"] = poly_map_to_json(m.map);
    j["source_degree_bound"] = m.source_degree_bound;
    return j;
}

inline CenterMap center_map_from_json(const json& j, const std::string& path = "") {
    CenterMap m{poly_map_from_json(member(j, "map", path), path + "/map"), 1};
    const json& b = member(j, "source_degree_bound", path);
    if (!b.is_number_integer()) parse_fail(path + "/source_degree_bound", "expected an integer");
    m.source_degree_bound = b.get<std::int64_t>();
    return m;
}

inline json one_form_to_json(const PolyOneForm& f) {
    json j;
    j["ring"] = ring_to_json(f.ring);
    j["n"] = f.n;
    j["components"] = poly_images_to_json(f.ring, f.components);
    return j;
}

inline PolyOneForm one_form_from_json(const json& j, const std::string& path = "") {
    Ring ring = ring_from_json(member(j, "ring", path), path + "/ring");
    std::uint32_t n = uint_field(member(j, "n", path), path + "/n");
    PolyOneForm f{ring, n, {}};
    f.components =
        poly_images_from_json(ring, 2 * n, member(j, "components", path), path + "/components");
    f.validate();
    return f;
}

// ---- tame words ------------------------------------------------------------

inline json word_to_json(const TameWord& w) {
    json j;
    j["ring"] = ring_to_json(w.ring);
    j["n"] = w.n;
    json letters = json::array();
    for (const auto& letter : w.letters) {
        json l;
        if (const auto* sm = std::get_if<SymplecticMatrix>(&letter)) {
            const RingMatrix& m = sm->matrix();
            json rows = json::array();
            for (std::uint32_t i = 0; i < m.dim; ++i) {
                json row = json::array();
                for (std::uint32_t k = 0; k < m.dim; ++k)
                    row.push_back(coeff_to_json(m.ring, m.at(i, k)));
                rows.push_back(std::move(row));
            }
            l["matrix"] = std::move(rows);
        } else {
            const auto& t = std::get<Transvection>(letter);
            l["transvection"] = terms_to_json(t.f().ring(), t.f().terms());
        }
        letters.push_back(std::move(l));
    }
    j["word"] = std::move(letters);
    return j;
}

inline TameWord word_from_json(const json& j, const std::string& path = "") {
    Ring ring = ring_from_json(member(j, "ring", path), path + "/ring");
    std::uint32_t n = uint_field(member(j, "n", path), path + "/n");
    TameWord w{ring, n, {}};
    const json& letters = member(j, "word", path);
    if (!letters.is_array()) parse_fail(path + "/word", "expected a letter array");
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const std::string lpath = path + "/word/" + std::to_string(i);
        const json& l = letters[i];
        if (!l.is_object()) parse_fail(lpath, "expected a letter object");
        if (auto it = l.find("matrix"); it != l.end()) {
            const json& rows = *it;
            if (!rows.is_array() || rows.size() != 2 * n)
                parse_fail(lpath + "/matrix", "expected " + std::to_string(2 * n) + " rows");
            RingMatrix m = RingMatrix::zero(ring, 2 * n);
            for (std::uint32_t r = 0; r < 2 * n; ++r) {
                const json& row = rows[r];
                if (!row.is_array() || row.size() != 2 * n)
                    parse_fail(lpath + "/matrix/" + std::to_string(r),
                               "expected " + std::to_string(2 * n) + " entries");
                for (std::uint32_t c = 0; c < 2 * n; ++c)
                    m.at(r, c) = coeff_from_json(
                        ring, row[c], lpath + "/matrix/" + std::to_string(r) + "/" + std::to_string(c));
            }
            w.letters.push_back(SymplecticMatrix::make(std::move(m)));
        } else if (auto jt = l.find("transvection"); jt != l.end()) {
            PolyElement f(ring, n);
            terms_from_json(ring, n, *jt, lpath + "/transvection",
                            [&](const MultiIndex& e, const RingValue& c) { f.add_term(e, c); });
            w.letters.push_back(Transvection::make(std::move(f)));
        } else {
            parse_fail(lpath, "letter needs \"matrix\" or \"transvection\"");
        }
    }
    w.validate();
    return w;
}

// ---- azumaya ---------------------------------------------------------------

inline json az_algebra_to_json(const AzAlgebra& alg) {
    json j;
    j["p"] = alg.p().str();
    j["svars"] = alg.svars;
    json factors = json::array();
    for (const auto& [f, g] : alg.factors) {
        json e;
        e["f"] = terms_to_json(alg.base, f.terms());
        e["g"] = terms_to_json(alg.base, g.terms());
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    return j;
}

inline AzAlgebra az_algebra_from_json(const json& j, const std::string& path = "") {
    Integer p = integer_from_json(member(j, "p", path), path + "/p");
    std::uint32_t svars = uint_field(member(j, "svars", path), path + "/svars");
    try {
        Ring base = Ring::prime_field(p);
        const json& factors = member(j, "factors", path);
        if (!factors.is_array()) parse_fail(path + "/factors", "expected a factor array");
        std::vector<std::pair<PolyElement, PolyElement>> fs;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const std::string fpath = path + "/factors/" + std::to_string(i);
            PolyElement f(base, svars), g(base, svars);
            terms_from_json(base, svars, member(factors[i], "f", fpath), fpath + "/f",
                            [&](const MultiIndex& e, const RingValue& c) { f.add_term(e, c); });
            terms_from_json(base, svars, member(factors[i], "g", fpath), fpath + "/g",
                            [&](const MultiIndex& e, const RingValue& c) { g.add_term(e, c); });
            fs.emplace_back(std::move(f), std::move(g));
        }
        return AzAlgebra::make(p, svars, std::move(fs));
    } catch (const Error& e) {
        if (e.code() == Errc::parse_error) throw;
        parse_fail(path, e.what());
    }
}

inline json az_element_to_json(const AzElement& a) {
    json j;
    j["algebra"] = az_algebra_to_json(a.algebra());
    if (a.terms().empty()) {
        j["terms"] = "0";
        return j;
    }
    json arr = json::array();
    for (const auto& [e, c] : a.terms()) {
        json t;
        t["e"] = json::array();
        for (std::uint32_t v : e) t["e"].push_back(v);
        t["c"] = terms_to_json(a.algebra().base, c.terms());
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j;
}

// substitution expressions: letters use 1-based factor indices, matching the
// xi'_1 naming in relation tables
inline json az_expr_to_json(const AzAlgebra& alg, const AzExpr& expr) {
    json arr = json::array();
    for (const auto& word : expr) {
        json w;
        w["coeff"] = terms_to_json(alg.base, word.coeff.terms());
        json letters = json::array();
        for (const AzGenRef& g : word.letters) {
            json l;
            l["factor"] = g.factor + 1;
            l["gen"] = g.eta ? "eta" : "xi";
            letters.push_back(std::move(l));
        }
        w["letters"] = std::move(letters);
        arr.push_back(std::move(w));
    }
    return arr;
}

inline AzExpr az_expr_from_json(const AzAlgebra& alg, const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected a word array");
    AzExpr expr;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string wpath = path + "/" + std::to_string(i);
        PolyElement coeff(alg.base, alg.svars);
        terms_from_json(alg.base, alg.svars, member(j[i], "coeff", wpath), wpath + "/coeff",
                        [&](const MultiIndex& e, const RingValue& c) { coeff.add_term(e, c); });
        AzWordTerm word{std::move(coeff), {}};
        const json& letters = member(j[i], "letters", wpath);
        if (!letters.is_array()) parse_fail(wpath + "/letters", "expected a letter array");
        for (std::size_t k = 0; k < letters.size(); ++k) {
            const std::string lpath = wpath + "/letters/" + std::to_string(k);
            std::uint32_t factor = uint_field(member(letters[k], "factor", lpath), lpath + "/factor");
            if (factor == 0) parse_fail(lpath + "/factor", "factor indices are 1-based");
            const json& g = member(letters[k], "gen", lpath);
            if (!g.is_string() || (g.get<std::string>() != "xi" && g.get<std::string>() != "eta"))
                parse_fail(lpath + "/gen", "expected \"xi\" or \"eta\"");
            word.letters.push_back(AzGenRef{factor - 1, g.get<std::string>() == "eta"});
        }
        expr.push_back(std::move(word));
    }
    return expr;
}

inline json substitution_to_json(const SubstitutionMap& m) {
    json j;
    j["source"] = az_algebra_to_json(m.source);
    j["target"] = az_algebra_to_json(m.target);
    json images = json::array();
    for (const auto& expr : m.images) images.push_back(az_expr_to_json(m.target, expr));
    j["images"] = std::move(images);
    return j;
}

inline SubstitutionMap substitution_from_json(const json& j, const std::string& path = "") {
    SubstitutionMap m{az_algebra_from_json(member(j, "source", path), path + "/source"),
                      az_algebra_from_json(member(j, "target", path), path + "/target"),
                      {}};
    const json& images = member(j, "images", path);
    if (!images.is_array()) parse_fail(path + "/images", "expected an image array");
    for (std::size_t i = 0; i < images.size(); ++i)
        m.images.push_back(
            az_expr_from_json(m.target, images[i], path + "/images/" + std::to_string(i)));
    return m;
}

// ---- reports ---------------------------------------------------------------

inline json endo_report_to_json(const EndoReport& r, const Ring& ring) {
    json j;
    j["relations_ok"] = r.relations_ok;
    j["inverse_checked"] = r.inverse_checked;
    j["inverse_ok"] = r.inverse_ok;
    json defects = json::array();
    for (const auto& d : r.defects) {
        json e;
        e["i"] = d.i + 1;
        e["j"] = d.j + 1;
        e["defect"] = terms_to_json(ring, d.defect.terms());
        defects.push_back(std::move(e));
    }
    j["defects"] = std::move(defects);
    json inv = json::array();
    for (const auto& d : r.inverse_defects) {
        json e;
        e["i"] = d.i + 1;
        e["side"] = d.left ? "left" : "right";
        e["got"] = terms_to_json(ring, d.got.terms());
        inv.push_back(std::move(e));
    }
    j["inverse_defects"] = std::move(inv);
    j["pass"] = r.pass();
    return j;
}

inline json degree_report_to_json(const DegreeReport& r) {
    json j;
    j["pass"] = r.pass;
    j["bound"] = r.bound;
    j["image_degrees"] = r.image_degrees;
    return j;
}

inline json profile_to_json(const PrimeProfile& prof) {
    json j;
    j["n"] = prof.n;
    j["source"] = endo_to_json(prof.source);
    json primes = json::array();
    for (const auto& e : prof.primes) {
        json p;
        p["p"] = e.p.str();
        p["center_map"] = e.map ? center_map_to_json(*e.map) : json(nullptr);
        p["untwisted"] = e.untwisted ? center_map_to_json(*e.untwisted) : json(nullptr);
        p["degree_ok"] = e.degree_ok;
        if (!e.error.empty()) p["error"] = e.error;
        primes.push_back(std::move(p));
    }
    j["primes"] = std::move(primes);
    if (prof.reconstruction) {
        json r;
        r["map"] = prof.reconstruction->map ? poly_map_to_json(*prof.reconstruction->map)
                                            : json(nullptr);
        json cps = json::array();
        for (const Integer& p : prof.reconstruction->check_primes) cps.push_back(p.str());
        r["check_primes"] = std::move(cps);
        r["agrees"] = prof.reconstruction->agrees;
        if (!prof.reconstruction->error.empty()) r["error"] = prof.reconstruction->error;
        j["reconstruction"] = std::move(r);
    } else {
        j["reconstruction"] = nullptr;
    }
    return j;
}

inline json correspondence_to_json(const CorrespondenceReport& rep) {
    json j;
    json primes = json::array();
    for (const auto& e : rep.primes) {
        json p;
        p["p"] = e.p.str();
        p["pass"] = e.pass();
        if (e.verdict) {
            json v;
            v["coeffs_are_pth_powers"] = e.verdict->coeffs_are_pth_powers;
            v["functorial_ok"] = e.verdict->functorial_ok;
            v["poisson_match"] = e.verdict->poisson_match;
            v["twist_match"] = e.verdict->twist_match;
            v["symplecto_ok"] = e.verdict->symplecto_ok;
            v["degree_ok"] = e.verdict->degree_ok;
            v["inverse_ok"] = e.verdict->inverse_ok;
            v["reduction_commutes"] = e.verdict->reduction_commutes;
            p["verdict"] = std::move(v);
        } else {
            p["verdict"] = nullptr;
        }
        if (!e.error.empty()) p["error"] = e.error;
        primes.push_back(std::move(p));
    }
    j["primes"] = std::move(primes);
    j["pass"] = rep.pass();
    return j;
}

// witness indices are 1-based on the wire
inline json kernel_to_json(const KernelReport& rep) {
    json j;
    j["weyl_identity"] = rep.weyl_identity;
    j["poisson_identity"] = rep.poisson_identity;
    j["weyl_witness"] = rep.weyl_witness ? json(*rep.weyl_witness + 1) : json(nullptr);
    j["poisson_witness"] = rep.poisson_witness ? json(*rep.poisson_witness + 1) : json(nullptr);
    json primes = json::array();
    for (const auto& e : rep.primes) {
        json p;
        p["p"] = e.p.str();
        p["center_identity"] = e.center_identity;
        p["untwisted_identity"] = e.untwisted_identity;
        p["poisson_identity"] = e.poisson_identity;
        if (!e.error.empty()) p["error"] = e.error;
        primes.push_back(std::move(p));
    }
    j["primes"] = std::move(primes);
    j["kernels_agree"] = rep.kernels_agree();
    return j;
}

inline json subst_report_to_json(const SubstReport& rep) {
    json j;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["relation"] = c.relation;
        e["computed"] = az_element_to_json(c.computed);
        e["expected"] = az_element_to_json(c.expected);
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["pass"] = rep.pass;
    return j;
}

inline json triple_reading_to_json(const TripleReading& r) {
    json j;
    j["reading"] = r.reading;
    json rels = json::array();
    for (const auto& rel : r.relations) {
        json e;
        e["relation"] = rel.relation;
        e["computed"] = az_element_to_json(rel.computed);
        e["expected"] = az_element_to_json(rel.expected);
        switch (rel.verdict) {
            case TripleVerdict::exact: e["verdict"] = "exact"; break;
            case TripleVerdict::sign_flipped: e["verdict"] = "sign_flipped"; break;
            case TripleVerdict::failed: e["verdict"] = "failed"; break;
        }
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    j["structural_pass"] = r.structural_pass;
    j["sign_clean"] = r.sign_clean;
    return j;
}

inline json triple_report_to_json(const TripleReport& rep) {
    json j;
    j["displayed"] = triple_reading_to_json(rep.displayed);
    j["listed"] = triple_reading_to_json(rep.listed);
    return j;
}

inline json fp_matrix_to_json(const FpMatrix& m) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (std::uint32_t k = 0; k < m.dim; ++k) row.push_back(m.at(i, k).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json matrix_rep_to_json(const MatrixRepReport& rep) {
    json j;
    j["p"] = rep.x.p.str();
    j["x"] = fp_matrix_to_json(rep.x);
    j["d"] = fp_matrix_to_json(rep.d);
    j["commutator_is_identity"] = rep.commutator_is_identity;
    j["x_pth_power_zero"] = rep.x_pth_power_zero;
    j["d_pth_power_zero"] = rep.d_pth_power_zero;
    j["span_rank"] = rep.span_rank;
    j["full_span"] = rep.full_span;
    j["pass"] = rep.pass();
    return j;
}

} // namespace weyl

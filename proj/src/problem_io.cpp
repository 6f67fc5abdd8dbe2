#include "atdm/problem_io.hpp"

#include "atdm/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace atdm {

using nlohmann::json;

namespace {

Rational rational_field(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError("problem json: expected integer or \"p/q\" string");
}

LinExp linexp_from(const json& j) {
    LinExp e;
    e.a = j.contains("a") ? rational_field(j.at("a")) : Rational(0);
    e.b = j.contains("b") ? rational_field(j.at("b")) : Rational(0);
    return e;
}

json linexp_to(const LinExp& e) {
    return json{{"a", to_string(e.a)}, {"b", to_string(e.b)}};
}

Series series_from(const json& j) {
    if (!j.is_array()) throw ParseError("problem json: series literal must be an array of terms");
    std::vector<Term> terms;
    for (const auto& tj : j) {
        Rational coeff = rational_field(tj.at("coeff"));
        int xpow = tj.value("xpow", 0);
        LinExp tpow = tj.contains("tpow") ? linexp_from(tj.at("tpow")) : LinExp{0, 0};
        std::vector<LinExp> gn, gd;
        if (tj.contains("gnum"))
            for (const auto& g : tj.at("gnum")) gn.push_back(linexp_from(g));
        if (tj.contains("gden"))
            for (const auto& g : tj.at("gden")) gd.push_back(linexp_from(g));
        terms.emplace_back(std::move(coeff), xpow, std::move(tpow), std::move(gn), std::move(gd));
    }
    return Series{std::move(terms)};
}

json series_to(const Series& s) {
    json arr = json::array();
    for (const auto& t : s.canonical_terms()) {
        json tj{{"coeff", to_string(t.coeff)}, {"xpow", t.xpow}, {"tpow", linexp_to(t.tpow)}};
        if (!t.gnum.empty()) {
            tj["gnum"] = json::array();
            for (const auto& g : t.gnum) tj["gnum"].push_back(linexp_to(g));
        }
        if (!t.gden.empty()) {
            tj["gden"] = json::array();
            for (const auto& g : t.gden) tj["gden"].push_back(linexp_to(g));
        }
        arr.push_back(tj);
    }
    return arr;
}

Var var_from(const std::string& s) {
    if (s == "u" || s == "U") return Var::U;
    if (s == "v" || s == "V") return Var::V;
    throw ParseError("problem json: variable must be \"u\" or \"v\", got \"" + s + "\"");
}

SingularForm singular_from(const std::string& s) {
    if (s == "none") return SingularForm::none;
    if (s == "div_x2_x2") return SingularForm::div_x2_x2;
    if (s == "div_x_x") return SingularForm::div_x_x;
    throw ParseError("problem json: unknown singular form \"" + s + "\"");
}

std::string singular_to(SingularForm f) {
    switch (f) {
        case SingularForm::none: return "none";
        case SingularForm::div_x2_x2: return "div_x2_x2";
        case SingularForm::div_x_x: return "div_x_x";
    }
    return "none";
}

std::vector<LinearTermSpec> linear_from(const json& j) {
    std::vector<LinearTermSpec> out;
    for (const auto& lj : j) {
        LinearTermSpec lt;
        lt.coeff = series_from(lj.at("coeff"));
        lt.var = var_from(lj.at("var").get<std::string>());
        lt.dx_order = lj.value("dx", 0);
        lt.dt_order = lj.value("dt", 0);
        lt.singular = singular_from(lj.value("singular", "none"));
        if (lt.dx_order < 0 || lt.dx_order > 2 || lt.dt_order < 0 || lt.dt_order > 1)
            throw ParseError("problem json: derivative orders out of range (dx 0..2, dt 0..1)");
        out.push_back(std::move(lt));
    }
    return out;
}

json linear_to(const std::vector<LinearTermSpec>& lts) {
    json arr = json::array();
    for (const auto& lt : lts) {
        arr.push_back(json{{"coeff", series_to(lt.coeff)},
                           {"var", lt.var == Var::U ? "u" : "v"},
                           {"dx", lt.dx_order},
                           {"dt", lt.dt_order},
                           {"singular", singular_to(lt.singular)}});
    }
    return arr;
}

WrappedNonlinearity nonlinear_from(const json& j) {
    WrappedNonlinearity nl;
    if (j.is_null()) return nl;
    nl.wrapper = singular_from(j.value("wrapper", "none"));
    for (const auto& pj : j.at("products")) {
        NonlinearitySpec::Product p;
        p.scale = pj.contains("scale") ? rational_field(pj.at("scale")) : Rational(1);
        for (const auto& fj : pj.at("factors")) {
            DerivFactor f;
            f.var = var_from(fj.at("var").get<std::string>());
            f.dx_order = fj.value("dx", 0);
            f.dt_order = fj.value("dt", 0);
            if (f.dx_order < 0 || f.dx_order > 2 || f.dt_order < 0 || f.dt_order > 1)
                throw ParseError("problem json: factor orders out of range (dx 0..2, dt 0..1)");
            p.factors.push_back(f);
        }
        if (p.factors.size() < 2)
            throw ParseError("problem json: nonlinear products need at least two factors");
        nl.spec.products.push_back(std::move(p));
    }
    return nl;
}

json nonlinear_to(const WrappedNonlinearity& nl) {
    if (nl.empty()) return nullptr;
    json products = json::array();
    for (const auto& p : nl.spec.products) {
        json factors = json::array();
        for (const auto& f : p.factors)
            factors.push_back(json{{"var", f.var == Var::U ? "u" : "v"},
                                   {"dx", f.dx_order},
                                   {"dt", f.dt_order}});
        products.push_back(json{{"scale", to_string(p.scale)}, {"factors", factors}});
    }
    return json{{"wrapper", singular_to(nl.wrapper)}, {"products", products}};
}

}  // namespace

ProblemSpec problem_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("problem json: ") + e.what());
    }
    try {
        ProblemSpec spec;
        spec.name = j.value("name", "problem");
        const std::string uo = j.value("u_order", "beta+1");
        const std::string vo = j.value("v_order", "beta");
        if (uo != "beta+1") throw ParseError("problem json: u_order must be \"beta+1\"");
        if (vo != "beta") throw ParseError("problem json: v_order must be \"beta\"");
        spec.f0 = series_from(j.at("f0"));
        spec.f1 = series_from(j.at("f1"));
        spec.g0 = series_from(j.at("g0"));
        spec.source_u = series_from(j.at("source_u"));
        spec.source_v = series_from(j.at("source_v"));
        spec.linear_u = linear_from(j.at("linear_u"));
        spec.linear_v = linear_from(j.at("linear_v"));
        if (j.contains("nonlinear_u")) spec.nonlinear_u = nonlinear_from(j.at("nonlinear_u"));
        if (j.contains("nonlinear_v")) spec.nonlinear_v = nonlinear_from(j.at("nonlinear_v"));
        const std::string placement = j.value("source_placement", "in_w1");
        if (placement == "in_w0") {
            spec.source_placement = SourcePlacement::in_w0;
        } else if (placement == "in_w1") {
            spec.source_placement = SourcePlacement::in_w1;
        } else {
            throw ParseError("problem json: source_placement must be in_w0 or in_w1");
        }
        // initial data and linear coefficients must be series in x only
        for (const Series* s : {&spec.f0, &spec.f1, &spec.g0})
            for (const auto& t : s->terms())
                if (!t.tpow.is_zero())
                    throw ParseError("problem json: initial data must not depend on t");
        return spec;
    } catch (const ParseError&) {
        throw;
    } catch (const json::exception& e) {
        throw ParseError(std::string("problem json: ") + e.what());
    }
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return problem_from_json(ss.str());
}

std::string problem_to_json(const ProblemSpec& spec) {
    json j{{"name", spec.name},
           {"u_order", "beta+1"},
           {"v_order", "beta"},
           {"f0", series_to(spec.f0)},
           {"f1", series_to(spec.f1)},
           {"g0", series_to(spec.g0)},
           {"source_u", series_to(spec.source_u)},
           {"source_v", series_to(spec.source_v)},
           {"linear_u", linear_to(spec.linear_u)},
           {"linear_v", linear_to(spec.linear_v)},
           {"source_placement",
            spec.source_placement == SourcePlacement::in_w0 ? "in_w0" : "in_w1"}};
    if (!spec.nonlinear_u.empty()) j["nonlinear_u"] = nonlinear_to(spec.nonlinear_u);
    if (!spec.nonlinear_v.empty()) j["nonlinear_v"] = nonlinear_to(spec.nonlinear_v);
    return j.dump(2);
}

std::string spec_hash(const ProblemSpec& spec) {
    const std::string s = problem_to_json(spec);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace atdm

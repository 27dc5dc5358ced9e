#include "qindex/render.hpp"

#include <json.hpp>

#include <sstream>

namespace qindex {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "latex") return Format::Latex;
    if (s == "json") return Format::Json;
    throw DomainError("unknown format: " + s);
}

namespace {

// p1 -> p_{1}, q1 -> q_{1}, c2 -> c_{2}
std::string latex_name(const std::string& name) {
    std::size_t split = name.size();
    while (split > 0 && std::isdigit((unsigned char)name[split - 1])) --split;
    if (split == 0 || split == name.size()) return name;
    return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string text_monomial(const VarTable& vt, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += vt.name(i);
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

std::string latex_monomial(const VarTable& vt, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        s += latex_name(vt.name(i));
        if (m.exps[i] > 1) s += "^{" + std::to_string(m.exps[i]) + "}";
    }
    return s;
}

std::string latex_rational(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    std::string sign = sgn(q) < 0 ? "-" : "";
    Rational a = abs(q);
    return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

ordered_json expr_terms_json(const GradedPolynomial& expr) {
    ordered_json terms = ordered_json::array();
    const auto& vt = *expr.vars();
    for (auto it = expr.terms().rbegin(); it != expr.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        ordered_json exps = ordered_json::object();
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] > 0) exps[vt.name(i)] = m.exps[i];
        ordered_json term;
        term["exps"] = exps;
        term["coeff"] = {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
        terms.push_back(term);
    }
    return terms;
}

} // namespace

std::string render_expression(const GradedPolynomial& expr, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["terms"] = expr_terms_json(expr);
        return j.dump(2);
    }
    if (expr.is_zero()) return "0";
    const auto& vt = *expr.vars();
    std::ostringstream os;
    bool first = true;
    for (auto it = expr.terms().rbegin(); it != expr.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        std::string mono = f == Format::Latex ? latex_monomial(vt, m) : text_monomial(vt, m);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (f == Format::Latex) {
            std::string coeff = latex_rational(a);
            if (mono.empty()) os << coeff;
            else if (a == 1) os << mono;
            else os << coeff << " " << mono;
        } else {
            if (mono.empty()) os << to_string(a);
            else if (a == 1) os << mono;
            else os << to_string(a) << " " << mono;
        }
    }
    return os.str();
}

std::string render_formula(const IndexFormula& f, Format fmt) {
    if (fmt != Format::Json) return render_expression(f.expr, fmt);
    ordered_json j;
    j["dim"] = 4 * f.m;
    j["k"] = f.k;
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < f.expr.vars()->size(); ++i) gens.push_back(f.expr.vars()->name(i));
    j["generators"] = gens;
    j["terms"] = expr_terms_json(f.expr);
    return j.dump(2);
}

IndexFormula parse_formula_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("bad formula json: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("k") || !j.contains("terms"))
        throw DomainError("formula json needs dim, k and terms");
    int dim = j.at("dim").get<int>();
    if (dim <= 0 || dim % 4 != 0) throw DomainError("dim must be a positive multiple of 4");
    int m = dim / 4;
    int k = j.at("k").get<int>();
    auto pvt = pontryagin_basis(m).abstract_vars();

    if (j.contains("generators")) {
        std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
        if (gens.size() != pvt->size()) throw DomainError("unexpected generator list");
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] != pvt->name(i)) throw DomainError("unexpected generator list");
    }

    GradedPolynomial expr(pvt);
    for (const auto& term : j.at("terms")) {
        Monomial mono = Monomial::one(pvt->size());
        for (const auto& [name, e] : term.at("exps").items()) {
            auto idx = pvt->find(name);
            if (!idx) throw DomainError("unknown generator: " + name);
            mono.exps[*idx] = e.get<int>();
            if (mono.exps[*idx] < 0) throw DomainError("negative exponent");
        }
        auto c = rational_from_strings(term.at("coeff").at("num").get<std::string>(),
                                       term.at("coeff").at("den").get<std::string>());
        expr.add_term(mono, c);
    }
    if (!expr.is_zero() && !is_homogeneous_of(expr, 4 * m))
        throw DomainError("formula is not homogeneous of degree 4m");
    return IndexFormula{m, k, expr};
}

std::string render_conditions(const std::vector<IndexFormula>& fs,
                              const std::vector<IntegralityCondition>& conds, Format fmt) {
    auto combo_label = [&](const IntRow& combo) {
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < combo.size(); ++i) {
            if (sgn(combo[i]) == 0) continue;
            std::string coeff = Int(abs(combo[i])).get_str();
            if (first) {
                if (sgn(combo[i]) < 0) s += "-";
                first = false;
            } else {
                s += sgn(combo[i]) < 0 ? " - " : " + ";
            }
            if (coeff != "1") s += coeff + "*";
            s += "D" + std::to_string(fs[i].k);
        }
        if (s.empty()) s = "0";
        return s;
    };

    if (fmt == Format::Json) {
        ordered_json out = ordered_json::array();
        for (const auto& c : conds) {
            ordered_json j;
            ordered_json combo = ordered_json::array();
            for (const auto& x : c.combo) combo.push_back(x.get_str());
            j["combo"] = combo;
            j["label"] = combo_label(c.combo);
            j["residual"] = expr_terms_json(c.residual);
            out.push_back(j);
        }
        return out.dump(2);
    }

    std::ostringstream os;
    for (const auto& c : conds)
        os << combo_label(c.combo) << " = " << render_expression(c.residual, fmt) << "\n";
    return os.str();
}

ManifoldCharData parse_manifold_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("bad manifold json: ") + e.what());
    }
    if (!j.contains("m") || !j.contains("values"))
        throw DomainError("manifold json needs m and values");
    ManifoldCharData data;
    data.m = j.at("m").get<int>();
    if (data.m < 2) throw DomainError("need m >= 2");
    data.name = j.value("name", std::string("manifold"));
    auto pvt = pontryagin_basis(data.m).abstract_vars();

    for (const auto& entry : j.at("values")) {
        Monomial mono = Monomial::one(pvt->size());
        for (const auto& [name, e] : entry.at("exps").items()) {
            auto idx = pvt->find(name);
            if (!idx) throw DomainError("unknown generator: " + name);
            mono.exps[*idx] = e.get<int>();
            if (mono.exps[*idx] < 0) throw DomainError("negative exponent");
        }
        if (mono.degree(*pvt) != 4 * data.m)
            throw DomainError("manifold value for a monomial of degree other than 4m");
        auto v = rational_from_strings(entry.at("value").at("num").get<std::string>(),
                                       entry.at("value").at("den").get<std::string>());
        if (!data.values.emplace(mono.exps, v).second)
            throw DomainError("duplicate monomial in manifold data");
    }
    for (const auto& mono : enumerate_monomials(pvt, 4 * data.m))
        if (!data.values.count(mono.exps))
            throw DomainError("manifold data is missing a degree-4m monomial value");
    return data;
}

std::string render_manifold_json(const ManifoldCharData& data) {
    auto pvt = pontryagin_basis(data.m).abstract_vars();
    ordered_json j;
    j["name"] = data.name;
    j["m"] = data.m;
    ordered_json values = ordered_json::array();
    for (const auto& [exps, v] : data.values) {
        ordered_json entry;
        ordered_json ex = ordered_json::object();
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) ex[pvt->name(i)] = exps[i];
        entry["exps"] = ex;
        entry["value"] = {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
        values.push_back(entry);
    }
    j["values"] = values;
    return j.dump(2);
}

} // namespace qindex

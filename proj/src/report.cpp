#include "defw/report.hpp"
#include "defw/text.hpp"

namespace defw {

json to_json(const Rational& x) {
    return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
    return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

json to_json(const Monomial& m) {
    json a = json::array();
    for (const auto& g : m.factors())
        a.push_back({{"kind", g.kind == Kind::H ? "h" : "c"}, {"i", g.index}, {"a", g.order}});
    return a;
}

Monomial monomial_from_json(const AlgebraContext& ctx, const json& j) {
    std::vector<Generator> gens;
    for (const auto& f : j) {
        const auto kind = f.at("kind").get<std::string>();
        if (kind != "h" && kind != "c") throw ParseError("factor kind must be h or c");
        gens.push_back(make_generator(ctx, kind == "h" ? Kind::H : Kind::C, f.at("i").get<int>(),
                                      f.at("a").get<int>()));
    }
    return make_monomial(ctx, gens);
}

json to_json(const Element& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) terms.push_back({{"coeff", to_json(c)}, {"monomial", to_json(m)}});
    return {{"text", to_text(x)}, {"terms", terms}};
}

Element element_from_json(const AlgebraContext& ctx, const json& j) {
    Element x(ctx);
    for (const auto& t : j.at("terms")) x.add_term(monomial_from_json(ctx, t.at("monomial")), rational_from_json(t.at("coeff")));
    return x;
}

json to_json(const QVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v[i]));
    return a;
}

json to_json(const QMatrix& m) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(to_json(QVector(m.row(i).transpose())));
    return a;
}

json to_json(const ScaledInvariantValue& v) {
    return {{"rational_part", to_json(v.rational_part)}, {"pi_exponent", v.pi_exponent}};
}

json to_json(const CheckResult& r) {
    json j = {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.passed) j["counterexample"] = r.counterexample;
    return j;
}

json to_json(const AlgebraContext& ctx) {
    return {{"q", ctx.q}, {"r", ctx.r ? json(*ctx.r) : json("inf")}, {"variant", to_string(ctx.variant)}};
}

Range parse_range(const std::string& s) {
    auto bad = [&] { return ValidationError("malformed range '" + s + "'"); };
    auto num = [&](const std::string& t) {
        if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos) throw bad();
        return std::stoi(t);
    };
    auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = num(s);
    } else {
        r.lo = num(s.substr(0, dots));
        r.hi = num(s.substr(dots + 2));
    }
    if (r.lo > r.hi) throw ValidationError("empty range '" + s + "'");
    return r;
}

std::optional<int> parse_r(const std::string& s) {
    if (s == "inf") return std::nullopt;
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("--r must be a natural number or inf");
    return std::stoi(s);
}

json ReportRecord::to_json() const {
    json j = {{"command", command}, {"engine_version", kEngineVersion}, {"config", config}};
    if (wall_seconds) j["wall_seconds"] = *wall_seconds;
    j["ok"] = ok;
    j["result"] = result;
    return j;
}

}  // namespace defw

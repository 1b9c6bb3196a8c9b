#pragma once

#include "defw/checks.hpp"
#include "defw/cohomology.hpp"
#include "defw/invariants_sr.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace defw {

using json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.3.0";

json to_json(const Rational& x);
Rational rational_from_json(const json& j);
json to_json(const Monomial& m);
Monomial monomial_from_json(const AlgebraContext& ctx, const json& j);
// {"text": ..., "terms": [{"coeff": ..., "monomial": [...]}, ...]}
json to_json(const Element& x);
Element element_from_json(const AlgebraContext& ctx, const json& j);
json to_json(const QVector& v);
json to_json(const QMatrix& m);  // list of rows
json to_json(const ScaledInvariantValue& v);
json to_json(const CheckResult& r);
json to_json(const AlgebraContext& ctx);

struct Range {
    int lo = 0;
    int hi = 0;
};

// "A..B" or "N"
Range parse_range(const std::string& s);
std::optional<int> parse_r(const std::string& s);

struct ReportRecord {
    std::string command;
    json config;
    json result;
    bool ok = true;
    std::optional<double> wall_seconds;

    json to_json() const;
};

}  // namespace defw

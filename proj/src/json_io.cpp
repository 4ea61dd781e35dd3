#include "qgrowth/json_io.hpp"

#include <json.hpp>

#include "qgrowth/errors.hpp"

namespace qgrowth {

using json = nlohmann::ordered_json;

namespace {

json claim_json(const CongruenceClaim& c)
{
    json j;
    j["series"] = c.series_id;
    j["A"] = c.A;
    j["B"] = c.B;
    j["mod"] = to_string(c.modulus);
    j["n_max"] = c.n_max;
    if (c.filter) {
        j["filter"] = {{"mod", c.filter->modulus}, {"residues", c.filter->residues}};
    }
    return j;
}

} // namespace

std::string series_to_json(const QSeries& s, int indent)
{
    json j;
    j["grain"] = s.grain();
    j["offset"] = s.offset();
    j["prec"] = s.prec();
    if (s.ring().is_residues()) {
        const Integer& m = s.ring().modulus();
        j["ring"] = fits_i64(m) ? json{{"mod", to_i64(m)}} : json{{"mod", to_string(m)}};
    }
    else
        j["ring"] = "Z";
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j.dump(indent);
}

QSeries series_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
    try {
        const auto grain = j.at("grain").get<std::int64_t>();
        const auto offset = j.at("offset").get<std::int64_t>();
        const auto prec = j.at("prec").get<std::int64_t>();
        const json& ring_j = j.at("ring");
        CoefficientRing ring = CoefficientRing::integers();
        if (ring_j.is_string()) {
            if (ring_j.get<std::string>() != "Z")
                throw invalid_argument("ring must be \"Z\" or {\"mod\": m}");
        } else {
            const json& m = ring_j.at("mod");
            ring = CoefficientRing::residues(m.is_string() ? parse_integer(m.get<std::string>())
                                                           : from_i64(m.get<std::int64_t>()));
        }
        std::vector<Integer> coeffs;
        for (const auto& c : j.at("coeffs"))
            coeffs.push_back(c.is_string() ? parse_integer(c.get<std::string>()) : from_i64(c.get<std::int64_t>()));
        if (static_cast<std::int64_t>(coeffs.size()) != prec - offset)
            throw invalid_argument("coeffs length must equal prec - offset");
        return QSeries(grain, offset, std::move(coeffs), ring);
    } catch (const json::exception& e) {
        throw invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

std::string report_to_json(const CongruenceReport& report, int indent)
{
    json j;
    j["claim"] = claim_json(report.claim);
    j["verdict"] = report.verdict == Verdict::holds_on_range ? "holds-on-range" : "violated";
    json v = json::array();
    for (const auto& x : report.violations)
        v.push_back(json::array({x.n, to_string(x.coefficient)}));
    j["violations"] = std::move(v);
    j["checked_to"] = report.claim.n_max;
    return j.dump(indent);
}

std::string claims_to_json(const std::vector<CongruenceClaim>& claims, int indent)
{
    json arr = json::array();
    for (const auto& c : claims)
        arr.push_back(claim_json(c));
    return arr.dump(indent);
}

} // namespace qgrowth

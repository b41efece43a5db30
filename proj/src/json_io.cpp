#include "laceq/json_io.hpp"

namespace laceq {

using nlohmann::json;

void to_json(json& j, const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [key, c] : s.terms())
        terms.push_back(json::array({key.first, key.second, to_decimal(c)}));
    j = json{{"trunc_q", s.trunc_q()}, {"trunc_z", s.trunc_z()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const json& j) {
    TruncatedSeries s(j.at("trunc_z").get<int>(), j.at("trunc_q").get<int>());
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 3)
            throw std::invalid_argument("series term must be [zdeg, qdeg, coefficient]");
        s.set_coeff(term[0].get<int>(), term[1].get<int>(),
                    integer_from_decimal(term[2].get<std::string>()));
    }
    return s;
}

void to_json(json& j, const Partition& p) { j = p.parts; }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const LaceClass& eta) {
    json strands = json::array();
    for (const auto& [interval, count] : eta.mult)
        strands.push_back(
            json{{"start", interval.start}, {"end", interval.end}, {"mult", count}});
    j = json{{"n", eta.n}, {"strands", std::move(strands)}};
}

LaceClass lace_class_from_json(const json& j) {
    std::map<Interval, int> mult;
    for (const auto& strand : j.at("strands")) {
        const Interval interval{strand.at("start").get<int>(), strand.at("end").get<int>()};
        mult[interval] += strand.at("mult").get<int>();
    }
    return LaceClass(j.at("n").get<int>(), std::move(mult));
}

void to_json(json& j, const CutData& cut) {
    json mus = json::array();
    for (const auto& [key, rect] : cut.mus) {
        const auto [i, jj, k] = key;
        mus.push_back(json{
            {"i", i}, {"j", jj}, {"k", k}, {"rows", rect.rows}, {"cols", rect.cols}});
    }
    json nus = json::array();
    for (const auto& [key, nu] : cut.nus)
        nus.push_back(json{{"i", key.first}, {"k", key.second}, {"parts", nu.parts}});
    j = json{{"eta", cut.eta}, {"mus", std::move(mus)}, {"nus", std::move(nus)}};
}

CutData cut_data_from_json(const json& j) {
    CutData cut;
    cut.eta = lace_class_from_json(j.at("eta"));
    for (const auto& mu : j.at("mus")) {
        const auto key = std::make_tuple(mu.at("i").get<int>(), mu.at("j").get<int>(),
                                         mu.at("k").get<int>());
        if (cut.mus.count(key)) throw std::invalid_argument("duplicate rectangle key");
        cut.mus[key] = Rect{mu.at("rows").get<int>(), mu.at("cols").get<int>()};
    }
    for (const auto& nu : j.at("nus")) {
        const auto key = std::make_pair(nu.at("i").get<int>(), nu.at("k").get<int>());
        if (cut.nus.count(key)) throw std::invalid_argument("duplicate partition key");
        cut.nus[key] = Partition(nu.at("parts").get<std::vector<int>>());
    }
    return cut;
}

void to_json(json& j, const IdentityReport& report) {
    json mismatch = nullptr;
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        mismatch = json{{"zdeg", m.zdeg},
                        {"qdeg", m.qdeg},
                        {"lhs", to_decimal(m.lhs_coeff)},
                        {"rhs", to_decimal(m.rhs_coeff)}};
    }
    j = json{{"identity", report.identity},
             {"dims", report.dims},
             {"w", report.w_text.empty() ? json(nullptr) : json(report.w_text)},
             {"orientation",
              report.orientation.empty() ? json(nullptr) : json(report.orientation)},
             {"trunc_q", report.trunc_q},
             {"trunc_z", report.trunc_z},
             {"class_count", report.class_count},
             {"equal", report.equal},
             {"first_mismatch", std::move(mismatch)},
             {"lhs", report.lhs},
             {"rhs", report.rhs}};
}

}  // namespace laceq

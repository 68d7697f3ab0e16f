#include "dposet/io.hpp"

#include <json.hpp>

#include <sstream>

namespace dposet {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::pair<std::string, std::string>> read_relations(const json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw UnknownLabel("relations must be [from, to] pairs");
        out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return out;
}

ordered_json q_to_json(const Q& q) {
    return ordered_json::array(
        {numerator(q).convert_to<long long>(),
         denominator(q).convert_to<long long>()});
}

Q q_from_json(const json& j) {
    if (j.is_number_integer()) return Q(j.get<long long>());
    if (j.is_array() && j.size() == 2)
        return Q(j[0].get<long long>(), j[1].get<long long>());
    throw UnknownLabel("rationals must be integers or [p, q] pairs");
}

} // namespace

DoublePoset double_poset_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::string> elements;
    for (const auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
    Poset plus(elements, read_relations(j.at("plus")));
    if (!j.contains("minus")) return induced_double(plus);
    Poset minus(elements, read_relations(j.at("minus")));
    return DoublePoset(plus, minus);
}

std::string double_poset_to_json(const DoublePoset& dp) {
    ordered_json j;
    j["elements"] = dp.labels();
    for (int sigma : {+1, -1}) {
        ordered_json rels = ordered_json::array();
        const Poset& p = dp.side(sigma);
        for (auto [a, b] : p.cover_relations())
            rels.push_back({p.labels()[a], p.labels()[b]});
        j[sigma > 0 ? "plus" : "minus"] = rels;
    }
    return j.dump();
}

DoublePoset parse_generator(const std::string& spec) {
    std::string kind = spec;
    std::vector<int> param;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        kind = spec.substr(0, colon);
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                param.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw UnknownGenerator("bad parameter in '" + spec + "'");
            }
        }
    }
    if (kind == "x") kind = "x_poset";
    if (kind == "altchain") kind = "alternating_chain_poset";
    if (kind == "perm") kind = "from_permutation";
    if (kind == "plane") kind = "plane_from_permutation";
    auto res = generate(kind, param);
    return res.is_double ? res.dposet : induced_double(res.poset);
}

std::string polytope_to_json(const QPolytope& p) {
    ordered_json j;
    j["ambient_dim"] = p.ambient_dim;
    if (p.vrep) {
        ordered_json verts = ordered_json::array();
        for (const auto& v : *p.vrep) {
            ordered_json row = ordered_json::array();
            for (const auto& c : v) row.push_back(q_to_json(c));
            verts.push_back(row);
        }
        j["vertices"] = verts;
    }
    if (p.hrep) {
        ordered_json ineqs = ordered_json::array();
        for (const auto& iq : *p.hrep) {
            ordered_json row;
            ordered_json normal = ordered_json::array();
            for (const auto& c : iq.normal) normal.push_back(q_to_json(c));
            row["normal"] = normal;
            row["rhs"] = q_to_json(iq.rhs);
            ineqs.push_back(row);
        }
        j["inequalities"] = ineqs;
    }
    return j.dump();
}

QPolytope polytope_from_json(const std::string& text) {
    json j = json::parse(text);
    int d = j.at("ambient_dim").get<int>();
    QPolytope p(d);
    if (j.contains("vertices")) {
        std::vector<QVec> V;
        for (const auto& row : j["vertices"]) {
            QVec v;
            for (const auto& c : row) v.push_back(q_from_json(c));
            if ((int)v.size() != d)
                throw UnknownLabel("vertex length does not match ambient_dim");
            V.push_back(std::move(v));
        }
        p.vrep = std::move(V);
    }
    if (j.contains("inequalities")) {
        std::vector<Ineq> H;
        for (const auto& row : j["inequalities"]) {
            Ineq iq;
            for (const auto& c : row.at("normal")) iq.normal.push_back(q_from_json(c));
            iq.rhs = q_from_json(row.at("rhs"));
            H.push_back(std::move(iq));
        }
        p.hrep = std::move(H);
    }
    return p;
}

QVec point_from_json(const std::string& text) {
    json j = json::parse(text);
    QVec v;
    for (const auto& c : j) v.push_back(q_from_json(c));
    return v;
}

std::string point_to_json(const QVec& v) {
    ordered_json j = ordered_json::array();
    for (const auto& c : v) j.push_back(q_to_json(c));
    return j.dump();
}

} // namespace dposet

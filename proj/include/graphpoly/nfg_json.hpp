#pragma once

#include <graphpoly/nfg.hpp>

#include <json.hpp>

#include <string>

namespace graphpoly {

/// NFG wire format: {"q": int, "edges": [[u,v],...], "tables": [["p/q",...],...]}.
/// Vertex count is the table count; rationals are exact strings.
inline nlohmann::json nfg_to_json(const NormalFactorGraph& h) {
    nlohmann::json j;
    j["q"] = h.alphabet_size();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : h.graph().edges()) j["edges"].push_back({e.u, e.v});
    j["tables"] = nlohmann::json::array();
    for (const auto& table : h.tables()) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& v : table) t.push_back(to_string(v));
        j["tables"].push_back(std::move(t));
    }
    return j;
}

inline NormalFactorGraph nfg_from_json(const nlohmann::json& j) {
    int q = j.at("q").get<int>();
    int n = static_cast<int>(j.at("tables").size());
    Multigraph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("nfg_from_json: edge entries must be [u,v]");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::vector<Rational>> tables;
    for (const auto& t : j.at("tables")) {
        std::vector<Rational> row;
        for (const auto& v : t) row.push_back(parse_rational(v.get<std::string>()));
        tables.push_back(std::move(row));
    }
    return NormalFactorGraph(std::move(g), q, std::move(tables));
}

}  // namespace graphpoly

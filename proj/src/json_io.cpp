#include "quiverkac/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace qk {

using nlohmann::json;

Quiver quiver_from_json(const json& j) {
    Quiver q;
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw SchemaError("quiver JSON must have 'vertices' and 'arrows'");
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw SchemaError("vertex ids must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    for (const auto& a : j.at("arrows")) {
        if (!a.is_object() || !a.contains("id") || !a.contains("tail") || !a.contains("head"))
            throw SchemaError("arrow entries need 'id', 'tail', 'head'");
        q.arrows.push_back({a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                            a.at("head").get<std::string>()});
    }
    q.validate();
    return q;
}

json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertices;
    j["arrows"] = json::array();
    for (const Arrow& a : q.arrows)
        j["arrows"].push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
    return j;
}

EquippedGraph equipped_graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw SchemaError("equipped graph JSON must have 'vertices' and 'edges'");
    EquippedGraph eg;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw SchemaError("vertex ids must be strings");
        eg.graph.g.vertices.push_back(v.get<std::string>());
    }
    std::vector<Arrow> firsts, seconds;
    std::vector<int> phi1, phi2;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("id") || !e.contains("ends") || !e.contains("phi"))
            throw SchemaError("edge entries need 'id', 'ends', 'phi'");
        auto ends = e.at("ends");
        auto phi = e.at("phi");
        if (ends.size() != 2 || phi.size() != 2)
            throw SchemaError("edge '" + e.at("id").get<std::string>() +
                              "' needs two ends and two phi bits");
        std::string id = e.at("id").get<std::string>();
        firsts.push_back({id, ends[0].get<std::string>(), ends[1].get<std::string>()});
        seconds.push_back({id + "*", ends[1].get<std::string>(), ends[0].get<std::string>()});
        phi1.push_back(phi[0].get<int>());
        phi2.push_back(phi[1].get<int>());
    }
    int n = static_cast<int>(firsts.size());
    for (int i = 0; i < n; ++i) eg.graph.g.arrows.push_back(firsts[i]);
    for (int i = 0; i < n; ++i) eg.graph.g.arrows.push_back(seconds[i]);
    eg.graph.involution.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        eg.graph.involution[i] = n + i;
        eg.graph.involution[n + i] = i;
    }
    for (int i = 0; i < n; ++i) eg.phi.push_back(phi1[i]);
    for (int i = 0; i < n; ++i) eg.phi.push_back(phi2[i]);
    eg.validate();
    return eg;
}

json equipped_graph_to_json(const EquippedGraph& eg) {
    json j;
    j["vertices"] = eg.graph.g.vertices;
    j["edges"] = json::array();
    for (auto [i, k] : eg.graph.orbits()) {
        const Arrow& a = eg.graph.g.arrows[i];
        j["edges"].push_back({{"id", a.id},
                              {"ends", {a.tail, a.head}},
                              {"phi", {eg.phi[i], eg.phi[k]}}});
    }
    return j;
}

std::pair<json, bool> load_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    if (j.is_object() && j.contains("edges")) return {j, true};
    return {j, false};
}

}  // namespace qk

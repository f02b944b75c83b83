#include "quiverkac/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

namespace qk {

using nlohmann::json;

PolyCache::PolyCache(std::string path) : path_(std::move(path)) {
    entries_ = load_file(path_);
}

std::optional<IntPolynomial> PolyCache::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return IntPolynomial(it->second);
}

void PolyCache::put(const std::string& key, const IntPolynomial& value) {
    entries_[key] = value.coeffs();
    if (!path_.empty()) store_file(path_, entries_);
}

std::map<std::string, std::vector<long long>> PolyCache::load_file(const std::string& path) {
    std::map<std::string, std::vector<long long>> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) return out;  // missing file reads as empty
    try {
        json j;
        in >> j;
        if (!j.is_object()) throw std::runtime_error("cache root is not an object");
        for (auto& [k, v] : j.items()) out[k] = v.get<std::vector<long long>>();
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache file '" << path << "': " << e.what()
                  << "\n";
        out.clear();
    }
    return out;
}

void PolyCache::store_file(const std::string& path,
                           const std::map<std::string, std::vector<long long>>& entries) {
    json j = json::object();
    for (const auto& [k, v] : entries) j[k] = v;
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump();
        out.flush();
        if (!out) throw std::runtime_error("cannot write cache file '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace cache file '" + path + "'");
}

}  // namespace qk

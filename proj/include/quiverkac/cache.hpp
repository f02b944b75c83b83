#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverkac/polynomial.hpp"

namespace qk {

// Disk-backed polynomial cache: a JSON object mapping key strings to
// coefficient arrays.  Writes go through a temp file and an atomic rename;
// a corrupt or missing file reads as empty (with a warning on stderr for
// corruption).
class PolyCache {
public:
    PolyCache() = default;  // memory-only
    explicit PolyCache(std::string path);

    std::optional<IntPolynomial> get(const std::string& key) const;
    void put(const std::string& key, const IntPolynomial& value);  // persists if disk-backed

    size_t size() const { return entries_.size(); }

    static std::map<std::string, std::vector<long long>> load_file(const std::string& path);
    static void store_file(const std::string& path,
                           const std::map<std::string, std::vector<long long>>& entries);

private:
    std::string path_;
    std::map<std::string, std::vector<long long>> entries_;
};

}  // namespace qk

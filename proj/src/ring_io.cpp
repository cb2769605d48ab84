#include "fusion/ring_io.hpp"

#include "json.hpp"

#include <fstream>
#include <stdexcept>

namespace fusion {

std::string ring_to_json(const FusionRing& ring, int indent) {
    const int r = ring.rank();
    nlohmann::json j;
    j["rank"] = r;
    j["dual"] = ring.dual_map();
    auto N = nlohmann::json::array();
    for (int i = 0; i < r; ++i) {
        auto plane = nlohmann::json::array();
        for (int jj = 0; jj < r; ++jj) {
            auto row = nlohmann::json::array();
            for (int k = 0; k < r; ++k) row.push_back(ring.N(i, jj, k));
            plane.push_back(std::move(row));
        }
        N.push_back(std::move(plane));
    }
    j["N"] = std::move(N);
    if (!ring.label().empty()) j["label"] = ring.label();
    return indent >= 0 ? j.dump(indent) : j.dump();
}

FusionRing ring_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int r = j.at("rank").get<int>();
    std::vector<int> dual = j.at("dual").get<std::vector<int>>();
    const auto& N = j.at("N");
    if ((int)N.size() != r) throw std::invalid_argument("ring JSON: bad N size");
    std::vector<std::uint8_t> coef((size_t)r * r * r);
    for (int i = 0; i < r; ++i)
        for (int jj = 0; jj < r; ++jj)
            for (int k = 0; k < r; ++k) {
                int v = N.at(i).at(jj).at(k).get<int>();
                if (v < 0 || v > 255) throw std::invalid_argument("ring JSON: coefficient range");
                coef[(size_t)(i * r + jj) * r + k] = (std::uint8_t)v;
            }
    std::string label = j.value("label", "");
    return FusionRing(r, std::move(dual), std::move(coef), std::move(label));
}

FusionRing ring_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ring file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ring_from_json(text);
}

void ring_to_file(const FusionRing& ring, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write ring file: " + path);
    out << ring_to_json(ring, 1) << "\n";
}

} // namespace fusion

#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "invograph/digraph.hpp"
#include "invograph/spectrum.hpp"

namespace testing {

// Test-side randomness is drawn from std::mt19937 so fixtures never share a
// stream with the code under test.
inline std::string node_name(std::size_t i) {
    std::ostringstream s;
    s << "n" << std::setw(3) << std::setfill('0') << i << ".com";
    return s.str();
}

inline invograph::Digraph random_graph(std::mt19937& gen, std::size_t n_nodes, std::size_t n_edges,
                                       int max_weight, bool self_loops = false) {
    invograph::DigraphBuilder b;
    for (std::size_t i = 0; i < n_nodes; ++i) b.add_node(node_name(i));
    std::uniform_int_distribution<std::size_t> pick(0, n_nodes - 1);
    std::uniform_int_distribution<int> weight(1, max_weight);
    for (std::size_t e = 0; e < n_edges; ++e) {
        const auto s = pick(gen);
        auto d = pick(gen);
        if (!self_loops && s == d) d = (d + 1) % n_nodes;
        b.add_edge(node_name(s), node_name(d), weight(gen));
    }
    return b.build();
}

// Distinct scores strictly inside (0, 1).
inline std::vector<double> random_scores(std::mt19937& gen, std::size_t n) {
    std::uniform_real_distribution<double> u(0.001, 0.999);
    std::set<double> seen;
    std::vector<double> out;
    while (out.size() < n) {
        const double s = u(gen);
        if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

inline invograph::Spectrum spectrum_from_scores(const std::vector<std::pair<std::string, double>>& scores) {
    invograph::Spectrum s;
    for (const auto& [domain, score] : scores) {
        // p_c + p_t = 1 keeps score == p_t exactly.
        s.points.emplace(domain, invograph::SpectrumPoint{domain, 1.0 - score, score, score});
    }
    return s;
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("invograph_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

}  // namespace testing

#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace fixtures {

namespace {

Diagram path(std::string name, Index n, QuiverType type) {
    Diagram d{std::move(name), n, {}, type};
    for (Index i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
    return d;
}

// Star with arms of the given lengths (number of vertices besides the centre).
Diagram star(std::string name, const std::vector<Index>& arms, QuiverType type) {
    Diagram d{std::move(name), 1, {}, type};
    for (Index len : arms) {
        Index prev = 0;
        for (Index k = 0; k < len; ++k) {
            d.edges.emplace_back(prev, d.n);
            prev = d.n++;
        }
    }
    return d;
}

} // namespace

Diagram dynkin_a(Index n) { return path("A" + std::to_string(n), n, QuiverType::Finite); }

Diagram dynkin_d(Index n) { return star("D" + std::to_string(n), {1, 1, n - 3}, QuiverType::Finite); }

Diagram dynkin_e(Index n) { return star("E" + std::to_string(n), {1, 2, n - 4}, QuiverType::Finite); }

Diagram euclidean_a(Index n) {
    Diagram d = path("~A" + std::to_string(n), n + 1, QuiverType::Tame);
    d.edges.emplace_back(n, 0);
    return d;
}

Diagram euclidean_d(Index n) {
    // A chain of n - 3 vertices with two leaves at each end.
    Diagram d{"~D" + std::to_string(n), n + 1, {}, QuiverType::Tame};
    const Index chain = n - 3;
    for (Index i = 0; i + 1 < chain; ++i) d.edges.emplace_back(i, i + 1);
    d.edges.emplace_back(0, chain);
    d.edges.emplace_back(0, chain + 1);
    d.edges.emplace_back(chain - 1, chain + 2);
    d.edges.emplace_back(chain - 1, chain + 3);
    return d;
}

Diagram euclidean_e(Index n) {
    if (n == 6) return star("~E6", {2, 2, 2}, QuiverType::Tame);
    if (n == 7) return star("~E7", {1, 3, 3}, QuiverType::Tame);
    return star("~E8", {1, 2, 5}, QuiverType::Tame);
}

Diagram kronecker(Index k) {
    Diagram d{"K" + std::to_string(k), 2, {}, k == 1 ? QuiverType::Finite : k == 2 ? QuiverType::Tame : QuiverType::Wild};
    for (Index i = 0; i < k; ++i) d.edges.emplace_back(0, 1);
    return d;
}

std::vector<Diagram> all_diagrams() {
    std::vector<Diagram> out;
    for (Index n = 1; n <= 8; ++n) out.push_back(dynkin_a(n));
    for (Index n = 4; n <= 8; ++n) out.push_back(dynkin_d(n));
    for (Index n = 6; n <= 8; ++n) out.push_back(dynkin_e(n));
    for (Index n = 1; n <= 7; ++n) out.push_back(euclidean_a(n));
    for (Index n = 4; n <= 7; ++n) out.push_back(euclidean_d(n));
    for (Index n = 6; n <= 8; ++n) out.push_back(euclidean_e(n));

    out.push_back(kronecker(3));
    out.push_back(kronecker(4));
    out.push_back(star("star5", {1, 1, 1, 1, 1}, QuiverType::Wild));
    out.push_back(star("T237", {1, 2, 6}, QuiverType::Wild));
    out.push_back(star("T334", {2, 2, 3}, QuiverType::Wild));
    {
        Diagram d{"A3-double", 3, {{0, 1}, {0, 1}, {1, 2}}, QuiverType::Wild};
        out.push_back(d);
    }
    {
        Diagram d{"triangle-double", 3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}}, QuiverType::Wild};
        out.push_back(d);
    }
    {
        Diagram d = euclidean_a(3);
        d.name = "~A3-plus-leaf";
        d.edges.emplace_back(0, 4);
        d.n = 5;
        d.type = QuiverType::Wild;
        out.push_back(d);
    }
    {
        Diagram d = euclidean_d(4);
        d.name = "~D4-plus-leaf";
        d.edges.emplace_back(1, 5);
        d.n = 6;
        d.type = QuiverType::Wild;
        out.push_back(d);
    }
    return out;
}

Quiver orient(const Diagram& d, std::mt19937_64& rng) {
    std::vector<Index> rank(static_cast<std::size_t>(d.n));
    std::iota(rank.begin(), rank.end(), Index{0});
    std::shuffle(rank.begin(), rank.end(), rng);
    std::vector<quiver::Arrow> arrows;
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
        auto [u, v] = d.edges[k];
        if (rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)]) std::swap(u, v);
        arrows.push_back({"e" + std::to_string(k + 1), u, v});
    }
    return Quiver::validate(d.n, std::move(arrows));
}

Quiver orient_descending(const Diagram& d) {
    std::vector<quiver::Arrow> arrows;
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
        auto [u, v] = d.edges[k];
        if (u < v) std::swap(u, v);
        arrows.push_back({"e" + std::to_string(k + 1), u, v});
    }
    return Quiver::validate(d.n, std::move(arrows));
}

std::vector<FixtureQuiver> fixture_quivers(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FixtureQuiver> out;
    out.push_back({"double5", double5_quiver(), QuiverType::Wild});
    for (const auto& d : all_diagrams()) {
        out.push_back({d.name + "/desc", orient_descending(d), d.type});
        for (int k = 1; k <= 2; ++k) out.push_back({d.name + "/rand" + std::to_string(k), orient(d, rng), d.type});
    }
    return out;
}

Quiver double5_quiver() {
    return Quiver::validate(5, {{"a1", 1, 0}, {"a2", 1, 0}, {"b", 2, 1}, {"c", 3, 2}, {"d1", 4, 3}, {"d2", 4, 3}});
}

Quiver kronecker_quiver(Index k) {
    std::vector<quiver::Arrow> arrows;
    for (Index i = 0; i < k; ++i) arrows.push_back({"k" + std::to_string(i + 1), 0, 1});
    return Quiver::validate(2, std::move(arrows));
}

Quiver a2_quiver() { return Quiver::validate(2, {{"a", 0, 1}}); }

Quiver random_quiver(std::mt19937_64& rng, Index max_vertices, Index max_extra) {
    const Index n = std::uniform_int_distribution<Index>(1, max_vertices)(rng);
    Diagram d{"random", n, {}, QuiverType::Wild};
    for (Index v = 1; v < n; ++v) d.edges.emplace_back(std::uniform_int_distribution<Index>(0, v - 1)(rng), v);
    if (n > 1) {
        const Index extra = std::uniform_int_distribution<Index>(0, max_extra)(rng);
        for (Index k = 0; k < extra; ++k) {
            Index u = std::uniform_int_distribution<Index>(0, n - 1)(rng);
            Index v = std::uniform_int_distribution<Index>(0, n - 2)(rng);
            if (v >= u) ++v;
            d.edges.emplace_back(u, v);
        }
    }
    return orient(d, rng);
}

quiver::DimVector random_vector(std::mt19937_64& rng, Index n, long lo, long hi) {
    quiver::DimVector x(n);
    std::uniform_int_distribution<long> dist(lo, hi);
    for (Index i = 0; i < n; ++i) x(i) = dist(rng);
    return x;
}

} // namespace fixtures

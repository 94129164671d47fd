#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quiver/error.hpp"
#include "quiver/forms.hpp"
#include "quiver/quiver.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace quiver;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::InvalidArgument;
}

void check_order(const Quiver& q) {
    const auto& order = q.canonical_order();
    std::vector<Index> pos(static_cast<std::size_t>(q.vertex_count()));
    for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<std::size_t>(order[k])] = static_cast<Index>(k);
    for (const auto& a : q.arrows())
        REQUIRE(pos[static_cast<std::size_t>(a.source)] > pos[static_cast<std::size_t>(a.target)]);
}

} // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(Quiver::validate(1, {}));
    CHECK(code_of([] { Quiver::validate(2, {{"a", 0, 1}, {"b", 1, 0}}); }) == Errc::CycleDetected);
    CHECK(code_of([] { Quiver::validate(3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}}); }) == Errc::CycleDetected);
    CHECK(code_of([] { Quiver::validate(2, {{"a", 0, 0}, {"b", 0, 1}}); }) == Errc::LoopArrow);
    CHECK(code_of([] { Quiver::validate(2, {{"a", 0, 1}, {"a", 0, 1}}); }) == Errc::DuplicateArrowName);
    CHECK(code_of([] { Quiver::validate(3, {{"a", 0, 1}}); }) == Errc::Disconnected);
    CHECK(code_of([] { Quiver::validate(2, {{"a", 0, 2}}); }) == Errc::InvalidVertex);
    CHECK(code_of([] { Quiver::validate(0, {}); }) == Errc::InvalidVertex);
}

TEST_CASE("the five-vertex quiver puts vertex 1 first") {
    const Quiver q = fixtures::double5_quiver();
    CHECK(q.canonical_order().front() == 0);
    CHECK(q.canonical_order() == std::vector<Index>{0, 1, 2, 3, 4});
    CHECK(q.multiplicity(1, 0) == 2);
    CHECK(q.multiplicity(4, 3) == 2);
    CHECK(q.is_sink(0));
    CHECK(q.is_source(4));
}

TEST_CASE("canonical order is admissible and smallest-first on every fixture") {
    for (const auto& f : fixtures::fixture_quivers()) check_order(f.quiver);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) check_order(fixtures::random_quiver(rng));

    const Quiver q = Quiver::validate(3, {{"a", 2, 0}, {"b", 2, 1}});
    CHECK(q.canonical_order() == std::vector<Index>{0, 1, 2});
    const Quiver r = Quiver::validate(3, {{"a", 0, 2}, {"b", 1, 2}});
    CHECK(r.canonical_order() == std::vector<Index>{2, 0, 1});
}

TEST_CASE("parser") {
    const Quiver q = parse_quiver("# header\n\nvertices 3  # trailing\narrow a 1 2\narrow b 3 2\n");
    CHECK(q.vertex_count() == 3);
    CHECK(q.arrow_count() == 2);
    CHECK(q.arrow(1).source == 2);
    CHECK(parse_quiver(format_quiver(q)) == q);

    auto parse_error_line = [](const std::string& text) {
        try {
            parse_quiver(text);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ParseError);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK_THAT(parse_error_line("vertices 2\narrow a 1\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THAT(parse_error_line("arrow a 1 2\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THAT(parse_error_line("vertices 2\n\narrow a 1 x\n"), Catch::Matchers::ContainsSubstring("line 3"));
    CHECK_THAT(parse_error_line("vertices 2\nvertices 2\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THAT(parse_error_line("vertices two\n"), Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_AS(parse_quiver("vertices 2\narrow a 1 3\n"), Error);
    CHECK_THROWS_AS(load_quiver("/nonexistent/file.quiver"), Error);
}

TEST_CASE("euler form examples") {
    const Quiver one = Quiver::validate(1, {});
    CHECK(euler_form(one, make_dim_vector({1}), make_dim_vector({1})) == 1);
    const Quiver k3 = fixtures::kronecker_quiver(3);
    CHECK(euler_form(k3, make_dim_vector({1, 1}), make_dim_vector({1, 1})) == -1);
    CHECK(tits_form(k3, make_dim_vector({1, 1})) == -1);
    const Quiver k2 = fixtures::kronecker_quiver(2);
    for (long n = 1; n <= 5; ++n) CHECK(tits_form(k2, make_dim_vector({n, n})) == 0);

    IntMatrix expected(2, 2);
    expected << 1, -3, 0, 1;
    CHECK(euler_matrix(k3) == expected);
    CHECK(euler_matrix(one) == IntMatrix::Identity(1, 1));
    CHECK_THROWS_AS(euler_form(k3, make_dim_vector({1}), make_dim_vector({1, 1})), Error);
}

TEST_CASE("euler form equals the matrix form, is bilinear, and e_i has value 1") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Quiver q = fixtures::random_quiver(rng);
        const Index n = q.vertex_count();
        const IntMatrix e = euler_matrix(q);
        const DimVector x = fixtures::random_vector(rng, n, -5, 5);
        const DimVector x2 = fixtures::random_vector(rng, n, -5, 5);
        const DimVector y = fixtures::random_vector(rng, n, -5, 5);
        const Integer value = euler_form(q, x, y);
        REQUIRE(value == Integer((x.transpose() * e * y)(0, 0)));
        REQUIRE(value == oracles::euler_sum(q, x, y));
        REQUIRE(euler_form(q, DimVector(x + x2), y) == value + euler_form(q, x2, y));
        REQUIRE(euler_form(q, DimVector(x * Integer(3)), y) == 3 * value);
        REQUIRE(symmetric_form(q, x, y) == value + euler_form(q, y, x));
        for (Index i = 0; i < n; ++i) REQUIRE(tits_form(q, unit_vector(n, i)) == 1);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                REQUIRE(e(i, j) == Integer(i == j ? 1 : 0) - Integer(q.multiplicity(i, j)));
    }
}

TEST_CASE("type classification matches the ADE and extended ADE tables") {
    CHECK(classify_type(fixtures::a2_quiver()) == QuiverType::Finite);
    CHECK(classify_type(fixtures::kronecker_quiver(2)) == QuiverType::Tame);
    const auto cert = type_certificate(fixtures::double5_quiver());
    CHECK(cert.type == QuiverType::Wild);
    REQUIRE(cert.negative_vector);
    CHECK(tits_form(fixtures::double5_quiver(), *cert.negative_vector) < 0);
    CHECK(tits_form(fixtures::double5_quiver(), make_dim_vector({1, 1, 0, 1, 1})) == 0);

    const auto all = fixtures::fixture_quivers();
    REQUIRE(all.size() >= 30);
    for (const auto& f : all) {
        INFO(f.name);
        const auto c = type_certificate(f.quiver);
        REQUIRE(c.type == f.type);
        if (c.type == QuiverType::Wild) {
            REQUIRE(c.negative_vector);
            REQUIRE(tits_form(f.quiver, *c.negative_vector) < 0);
        } else {
            REQUIRE_FALSE(c.negative_vector);
        }
    }
}

TEST_CASE("type classification agrees with the eigenvalue oracle on random quivers") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const Quiver q = fixtures::random_quiver(rng, 7, 3);
        const int sign = oracles::symmetric_definiteness(q);
        const QuiverType expected = sign > 0 ? QuiverType::Finite : sign == 0 ? QuiverType::Tame : QuiverType::Wild;
        REQUIRE(classify_type(q) == expected);
    }
}

TEST_CASE("projective and injective dimension vectors count paths") {
    const Quiver a2 = fixtures::a2_quiver();
    CHECK(proj_dim_vector(a2, 0) == make_dim_vector({1, 1}));
    CHECK(proj_dim_vector(a2, 1) == make_dim_vector({0, 1}));
    CHECK(inj_dim_vector(a2, 0) == make_dim_vector({1, 0}));
    CHECK(inj_dim_vector(a2, 1) == make_dim_vector({1, 1}));
    CHECK(proj_dim_vector(fixtures::kronecker_quiver(2), 0) == make_dim_vector({1, 2}));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Quiver q = fixtures::random_quiver(rng);
        const Index n = q.vertex_count();
        for (Index i = 0; i < n; ++i) {
            if (q.outgoing(i).empty()) REQUIRE(proj_dim_vector(q, i) == unit_vector(n, i));
            for (Index j = 0; j < n; ++j) {
                REQUIRE(proj_dim_vector(q, i)(j) == oracles::count_paths(q, i, j));
                REQUIRE(inj_dim_vector(q, i)(j) == oracles::count_paths(q, j, i));
            }
        }
        for (Index j = 0; j < n; ++j) {
            Integer ending = 0, summed = 0;
            for (Index i = 0; i < n; ++i) {
                ending += oracles::count_paths(q, i, j);
                summed += proj_dim_vector(q, i)(j);
            }
            REQUIRE(summed == ending);
        }
    }
}

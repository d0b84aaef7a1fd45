#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "splintkit/rootsys.hpp"

using namespace splintkit;

namespace {

std::vector<std::pair<std::string, std::string>> sorted_roots(const std::vector<Root>& rs)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : rs)
        out.emplace_back(to_string(r.weight), to_string(r.parity));
    std::sort(out.begin(), out.end());
    return out;
}

Weight w(std::vector<int> e, std::vector<int> d)
{
    return Weight(std::vector<Rational>(e.begin(), e.end()), std::vector<Rational>(d.begin(), d.end()));
}

} // namespace

TEST_SUITE("rootsys") {

TEST_CASE("closed-form counts up to parameter 6")
{
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int p = 0; p <= 6; ++p)
            for (int q = 0; q <= 6; ++q) {
                if (f == Family::C && q > 0)
                    continue;
                const auto want = oracle::root_count(f, p, q);
                CAPTURE(system_name(f, p, q));
                if (!want) {
                    CHECK_THROWS_AS(build(f, p, q), ParameterError);
                    continue;
                }
                const RootSystem rs = build(f, p, q);
                CHECK(rs.size() == *want);
                CHECK(rs.size() == expected_root_count(f, p, q));
            }
    CHECK(build(Family::G3).size() == 14);
    CHECK(build(Family::F4).size() == 18);
    CHECK(build(Family::D21a).size() == 7);
}

TEST_CASE("root sets match the coordinate displays")
{
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q) {
                if ((f == Family::C && q > 0) || !oracle::root_count(f, p, q))
                    continue;
                CAPTURE(system_name(f, p, q));
                CHECK(sorted_roots(build(f, p, q).roots()) == sorted_roots(oracle::displayed_roots(f, p, q)));
            }
}

TEST_CASE("examples")
{
    const RootSystem a11 = build(Family::A, 1, 1);
    CHECK(a11.count(Parity::even) == 2);
    CHECK(a11.count(Parity::odd) == 4);
    CHECK(a11.rank() == 3);

    const RootSystem b01 = build(Family::B, 0, 1);
    REQUIRE(b01.size() == 2);
    const auto d = b01.index_of(w({}, {1}));
    const auto d2 = b01.index_of(w({}, {2}));
    REQUIRE(d);
    REQUIRE(d2);
    CHECK(b01.parity(*d) == Parity::odd);
    CHECK(b01.parity(*d2) == Parity::even);
    auto s = find_sum(b01, b01.root(*d), b01.root(*d));
    REQUIRE(s);
    CHECK(s->weight == w({}, {2}));

    const RootSystem a00 = build(Family::A, 0, 0);
    REQUIRE(a00.size() == 1);
    CHECK(a00.parity(0) == Parity::odd);

    const RootSystem g3 = build(Family::G3);
    CHECK(g3.count(Parity::even) == 7);
    CHECK(g3.count(Parity::odd) == 7);
    CHECK(g3.rank() == 3);
}

TEST_CASE("find_sum in A(1,1)")
{
    const RootSystem rs = build(Family::A, 1, 1);
    const Root a{w({0, 0}, {1, -1}), Parity::even};
    const Root b{w({-1, 0}, {0, 1}), Parity::odd};
    auto s = find_sum(rs, a, b);
    REQUIRE(s);
    CHECK(s->weight == w({-1, 0}, {1, 0}));
    CHECK(s->parity == Parity::odd);
    const Root c{w({-1, 0}, {1, 0}), Parity::odd};
    const Root e{w({0, -1}, {0, 1}), Parity::odd};
    CHECK_FALSE(find_sum(rs, c, e));
}

TEST_CASE("pairing examples")
{
    const RootSystem g3 = build(Family::G3);
    CHECK(pairing(g3, w({1, 0}, {0}), w({0, 1}, {0})) == FormValue{Rational(1), Rational(0)});
    CHECK(pairing(g3, w({1, 0}, {0}), w({1, 0}, {0})) == FormValue{Rational(-2), Rational(0)});

    const RootSystem d = build(Family::D21a);
    const FormValue e11 = pairing(d, w({1, 0, 0}, {}), w({1, 0, 0}, {}));
    CHECK(e11.const_part == Rational(-1, 2));
    CHECK(e11.alpha_part == Rational(-1, 2));

    for (Family f : {Family::A, Family::B, Family::D}) {
        const RootSystem rs = build(f, 2, 2);
        Weight e(rs.eps_dim(), rs.delta_dim()), dl(rs.eps_dim(), rs.delta_dim());
        e.eps[0] = 1;
        dl.delta[0] = 1;
        CHECK(pairing(rs, e, dl).is_zero());
    }
    CHECK_THROWS_AS(pairing(g3, w({1}, {0}), w({1, 0}, {0})), std::invalid_argument);
}

TEST_CASE("F(4) half-integer odd roots")
{
    const RootSystem f4 = build(Family::F4);
    std::size_t halves = 0;
    for (const Root& r : f4.roots()) {
        bool half = false;
        for (std::size_t i = 0; i < r.weight.dim(); ++i)
            half = half || r.weight[i].denominator() == 2;
        if (half) {
            ++halves;
            CHECK(r.parity == Parity::odd);
        }
        for (std::size_t i = 0; i < r.weight.dim(); ++i)
            CHECK(r.weight[i].denominator() <= 2);
    }
    CHECK(halves == 8);
}

TEST_CASE("property: parity additivity, symmetry, distinctness")
{
    std::vector<RootSystem> systems = {build(Family::G3), build(Family::F4), build(Family::D21a)};
    for (Family f : {Family::A, Family::B, Family::D})
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q)
                if (oracle::root_count(f, p, q))
                    systems.push_back(build(f, p, q));
    for (int p = 2; p <= 5; ++p)
        systems.push_back(build(Family::C, p));
    for (Family f : {Family::An, Family::Bn, Family::Cn, Family::Dn})
        for (int p = 2; p <= 4; ++p)
            systems.push_back(build(f, p));
    systems.push_back(build(Family::G2));

    for (const RootSystem& rs : systems) {
        CAPTURE(rs.name());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < rs.size(); ++j) {
                const Weight s = rs.root(i).weight + rs.root(j).weight;
                if (auto k = rs.index_of(s))
                    CHECK(rs.parity(*k) == (rs.parity(i) ^ rs.parity(j)));
                CHECK(pairing(rs, rs.root(i).weight, rs.root(j).weight) ==
                      pairing(rs, rs.root(j).weight, rs.root(i).weight));
                if (i != j)
                    CHECK_FALSE(rs.root(i).weight == rs.root(j).weight);
            }
        for (std::size_t a = 0; a < rs.eps_dim(); ++a)
            for (std::size_t b = 0; b < rs.delta_dim(); ++b)
                CHECK(rs.form().at(a, rs.eps_dim() + b).is_zero());
        if (is_even_family(rs.family()))
            CHECK(rs.count(Parity::odd) == 0);
        for (std::size_t i = 0; i + 1 < rs.size(); ++i)
            CHECK(root_less(rs.root(i), rs.root(i + 1)));
    }
}

TEST_CASE("ranks")
{
    CHECK(build(Family::A, 2, 1).rank() == 4);
    CHECK(build(Family::B, 2, 3).rank() == 5);
    CHECK(build(Family::B, 0, 3).rank() == 3);
    CHECK(build(Family::C, 4).rank() == 4);
    CHECK(build(Family::D, 3, 2).rank() == 5);
    CHECK(build(Family::G3).rank() == 3);
    CHECK(build(Family::F4).rank() == 4);
    CHECK(build(Family::D21a).rank() == 3);
}

TEST_CASE("spec parsing")
{
    CHECK(build_from_spec("A(1,1)").name() == "A(1,1)");
    CHECK(build_from_spec("D(2,1;a)").family() == Family::D21a);
    CHECK(build_from_spec("G_2").size() == 6);
    CHECK_THROWS_AS(build_from_spec("X(1)"), ParameterError);
    CHECK_THROWS_AS(build_from_spec("C(1)"), ParameterError);
    CHECK_THROWS_AS(build_from_spec("A(1"), ParameterError);
}

TEST_CASE("rationals")
{
    CHECK(to_string(Rational(-2, 4)) == "-1/2");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("1/0") == std::nullopt);
    CHECK(parse_rational("x") == std::nullopt);
    for (int p = -6; p <= 6; ++p)
        for (int q = 1; q <= 5; ++q)
            CHECK(parse_rational(to_string(Rational(p, q))) == Rational(p, q));
}

} // TEST_SUITE

#include <doctest.h>

#include "oracles.hpp"
#include "splintkit/fixtures.hpp"
#include "splintkit/splint.hpp"

using namespace splintkit;

namespace {

std::shared_ptr<const RootSystem> sys(const std::string& spec)
{
    return std::make_shared<const RootSystem>(build_from_spec(spec));
}

RootMask by_names(const RootSystem& rs, std::initializer_list<const char*> names)
{
    RootMask m;
    for (const char* n : names) {
        bool found = false;
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (to_string(rs.root(i).weight) == n) {
                m.set(i);
                found = true;
            }
        REQUIRE_MESSAGE(found, n);
    }
    return m;
}

std::set<std::pair<std::string, std::string>> typings(const std::vector<SplintReport>& reps)
{
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& r : reps) {
        auto a = to_string(r.splint.type1), b = to_string(r.splint.type2);
        out.insert(std::minmax(a, b));
    }
    return out;
}

std::pair<std::string, std::string> typing(const char* a, const char* b)
{
    return std::minmax(to_string(parse_multiset(a)), to_string(parse_multiset(b)));
}

std::uint64_t coloring(const RootMask& m, std::size_t n)
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m.test(i))
            c |= std::uint64_t{1} << i;
    return c;
}

const std::vector<std::string> kSmall = {"A(1,0)", "A(0,1)", "B(0,1)", "B(1,1)", "C(2)",
                                         "D(2,1)", "D(2,1;a)", "A(1,1)", "B(0,2)"};

} // namespace

TEST_SUITE("splint") {

TEST_CASE("verify examples")
{
    auto d21 = sys("D(2,1)");
    const RootMask p1 = by_names(*d21, {"e1-e2", "d1-e1", "d1-e2"});
    const RootMask p2 = d21->all_roots() & ~p1;
    auto rep = verify(d21, p1, parse_multiset("A(1,0)"), p2, parse_multiset("2A_1+2A(0,0)"));
    CHECK(rep.verdict.ok());
    CHECK(rep.signature.has_value());
    CHECK(rep.splint.rank_certificate == std::array<int, 3>{2, 2, 3});
    CHECK(rep.splint.components1.size() == 1);
    CHECK(rep.splint.components2.size() == 4);

    const RootMask moved = by_names(*d21, {"d1+e1"});
    auto bad = verify(d21, p1 | moved, parse_multiset("A(1,0)"), p2 & ~moved, parse_multiset("2A_1+2A(0,0)"));
    CHECK(bad.verdict.kind == Verdict::Kind::invalid);
    CHECK(bad.verdict.detail.find("component-match") == 0);

    auto f4 = sys("F(4)");
    CHECK(verify(f4, f4->roots_of_parity(Parity::even), parse_multiset("A_1+B_3"), f4->roots_of_parity(Parity::odd),
                 parse_multiset("8A(0,0)"))
              .verdict.ok());

    auto c2 = sys("C(2)");
    const RootMask long_root = by_names(*c2, {"2d1"});
    CHECK(verify(c2, long_root, parse_multiset("A_1"), c2->all_roots() & ~long_root, parse_multiset("2A(0,0)"))
              .verdict.ok());
}

TEST_CASE("verify check order and errors")
{
    auto d21 = sys("D(2,1)");
    const RootMask all = d21->all_roots();
    const RootMask a = by_names(*d21, {"e1-e2"});
    auto r = verify(d21, all, parse_multiset("A_1"), a, parse_multiset("A_1"));
    CHECK(r.verdict.detail.find("disjoint-cover: roots in both parts") == 0);
    r = verify(d21, a, parse_multiset("A_1"), RootMask{}, parse_multiset("A_1"));
    CHECK(r.verdict.detail.find("disjoint-cover: roots in neither part") == 0);
    RootMask outside;
    outside.set(d21->size());
    CHECK_THROWS_AS(verify(d21, outside, parse_multiset("A_1"), all, parse_multiset("A_1")), std::invalid_argument);
    Weight not_root(2, 1);
    not_root.eps[0] = 3;
    CHECK_THROWS_AS(verify(d21, std::vector<Weight>{not_root}, parse_multiset("A_1"), std::vector<Weight>{},
                           parse_multiset("A_1")),
                    std::invalid_argument);

    // rank rule: B(2,2) side typed A(1,1)+2A_1 has effective rank 5 > 4
    const auto fx = check_fixture("IV.3");
    CHECK(fx.report.verdict.detail.find("rank:") == 0);
    VerifyOptions off;
    off.rank_rule = RankRule::off;
    CHECK(check_fixture("IV.3", off).report.verdict.ok());
}

TEST_CASE("property: symmetry and Weyl invariance on table fixtures")
{
    for (const Fixture& f : all_fixtures()) {
        const auto fx = check_fixture(f);
        if (!fx.report.verdict.ok())
            continue;
        const Splint& sp = fx.report.splint;
        if (sp.target->size() > 30)
            continue;
        CAPTURE(f.id);
        const auto swapped = verify(sp.target, sp.part2, sp.type2, sp.part1, sp.type1);
        CHECK(swapped.verdict.ok());
        CHECK(swapped.signature == fx.report.signature);
        const auto group = group_elements(*sp.target);
        Decomposer dec(*sp.target, sp.target->all_roots());
        for (const auto& g : group) {
            const RootMask t1 = apply_to_mask(g, sp.part1, sp.target->size());
            const RootMask t2 = apply_to_mask(g, sp.part2, sp.target->size());
            CHECK(canonical_signature(*sp.target, group, t1, t2) == *fx.report.signature);
            // Sides are matched on positive roots, so a reflection that sends part of a
            // component to negative roots can break the claimed typing. The moved pair
            // is still a splint, possibly under a different typing.
            const auto moved = verify(sp.target, t1, sp.type1, t2, sp.type2);
            if (moved.verdict.ok()) {
                CHECK(moved.signature == fx.report.signature);
            } else {
                CHECK(moved.verdict.detail.rfind("component-match:", 0) == 0);
                CHECK(dec.decompose(t1, sp.target->rank()).has_value());
                CHECK(dec.decompose(t2, sp.target->rank()).has_value());
            }
        }
    }
}

// Enumerate reports each class with its minimum-rank typing, so a table typing such as
// A(0,1) (rank 2) shows up as A_1+2A(0,0) (rank 1). The class is found through a
// partition realizing the table typing.
bool has_class(const std::string& spec, const std::string& t1, const std::string& t2)
{
    const auto rs = sys(spec);
    const auto parts = find_typed_splint(*rs, parse_multiset(t1), parse_multiset(t2));
    REQUIRE(parts);
    const auto sig = canonical_signature(*rs, parts->first, parts->second);
    for (const auto& r : enumerate(rs))
        if (*r.signature == sig)
            return true;
    return false;
}

TEST_CASE("enumerate examples")
{
    CHECK(has_class("A(1,1)", "A(0,1)", "A_1+2A(0,0)"));
    CHECK(has_class("A(1,1)", "A(1,0)", "A_1+2A(0,0)"));
    CHECK(has_class("A(1,1)", "2A_1", "4A(0,0)"));
    CHECK(has_class("B(0,2)", "A_2", "A_1+2A(0,0)"));
    CHECK(has_class("B(0,2)", "2A_1+A(0,0)", "2A_1+A(0,0)"));
    CHECK(has_class("D(2,1;a)", "A(1,0)+A_1", "A_1+2A(0,0)"));
    CHECK(has_class("D(2,1;a)", "3A_1", "4A(0,0)"));
    const auto a11 = typings(enumerate(sys("A(1,1)")));
    CHECK(a11.count(typing("2A_1", "4A(0,0)")));
}

TEST_CASE("enumerate: strict classes are lax classes")
{
    for (const char* spec : {"B(0,2)", "A(1,1)", "D(2,1)"}) {
        CAPTURE(spec);
        EnumerateOptions strict;
        strict.strict = true;
        std::set<SplintSignature> lax;
        for (const auto& r : enumerate(sys(spec)))
            lax.insert(*r.signature);
        for (const auto& r : enumerate(sys(spec), strict))
            CHECK(lax.count(*r.signature) == 1);
    }
}

TEST_CASE("enumerate: degenerate and capacity")
{
    CHECK(enumerate(sys("A(0,0)")).empty());
    CHECK_THROWS_AS(enumerate(sys("A(4,4)")), CapacityError);
    EnumerateOptions small;
    small.max_roots = 5;
    CHECK_THROWS_AS(enumerate(sys("A(1,1)"), small), CapacityError);
}

TEST_CASE("oracle: enumerate equals brute force on targets with at most 7 roots")
{
    for (const auto& spec : kSmall) {
        auto rs = sys(spec);
        REQUIRE(rs->size() <= 7);
        for (PairMode mode : {PairMode::unordered, PairMode::ordered})
            for (RankRule rule : {RankRule::zero_a00, RankRule::unit}) {
                CAPTURE(spec);
                CAPTURE(to_string(mode));
                CAPTURE(to_string(rule));
                const auto ref = oracle::enumerate(*rs, mode, rule);

                EnumerateOptions all;
                all.pair_mode = mode;
                all.rank_rule = rule;
                all.dedup = Dedup::none;
                std::set<std::uint64_t> got;
                for (const auto& r : enumerate(rs, all))
                    got.insert(coloring(r.splint.part1, rs->size()));
                CHECK(got == ref.valid);

                EnumerateOptions classes = all;
                classes.dedup = Dedup::weyl;
                const auto reps = enumerate(rs, classes);
                CHECK(reps.size() == ref.classes.size());
                std::set<std::size_t> hit;
                for (const auto& r : reps) {
                    const std::uint64_t c = coloring(r.splint.part1, rs->size());
                    for (std::size_t k = 0; k < ref.classes.size(); ++k)
                        if (ref.classes[k].count(c))
                            hit.insert(k);
                    const auto& sides = ref.sides.at(c);
                    CHECK(r.splint.rank_certificate[0] == sides.first.min_rank);
                    CHECK(r.splint.rank_certificate[1] == sides.second.min_rank);
                    CHECK(sides.first.types.count(to_string(r.splint.type1)) == 1);
                    CHECK(sides.second.types.count(to_string(r.splint.type2)) == 1);
                }
                CHECK(hit.size() == ref.classes.size());
            }
    }
}

TEST_CASE("enumerate is deterministic across worker counts")
{
    for (const char* spec : {"B(1,2)", "C(3)", "A(2,1)"}) {
        EnumerateOptions one, four;
        four.jobs = 4;
        const auto a = enumerate(sys(spec), one);
        const auto b = enumerate(sys(spec), four);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].splint.part1 == b[i].splint.part1);
            CHECK(a[i].signature == b[i].signature);
            CHECK(a[i].splint.type1 == b[i].splint.type1);
        }
    }
}

TEST_CASE("find_typed_splint")
{
    auto a12 = sys("A(1,2)");
    CHECK(find_typed_splint(*a12, parse_multiset("A(1,1)"), parse_multiset("2A_1+2A(0,0)")));
    CHECK_FALSE(find_typed_splint(*a12, parse_multiset("A(0,2)"), parse_multiset("2A_1+3A(0,0)")));
    auto c2 = sys("C(2)");
    auto p = find_typed_splint(*c2, parse_multiset("A_1"), parse_multiset("2A(0,0)"));
    REQUIRE(p);
    CHECK(p->first.count() == 1);
    CHECK(p->second.count() == 2);
}

} // TEST_SUITE

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <lattice_forge/dependency.hpp>
#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>

using namespace lattice_forge;

namespace {
    /// D as pairs of lattice elements.
    auto dependency_pairs(const DependencyData& d, const Relation& r) -> std::set<oracle::Pair>
    {
        std::set<oracle::Pair> out;
        for (std::size_t i = 0; i < r.size(); ++i)
            for_each_member(r.row(i), [&](std::size_t k) { out.insert({d.base[i].element, d.base[k].element}); });
        return out;
    }

    auto labelled(const FiniteLattice& l, const std::set<oracle::Pair>& pairs)
    {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [a, b] : pairs)
            out.insert({l.label(a), l.label(b)});
        return out;
    }

    auto all_lattices(std::size_t max)
    {
        std::vector<FiniteLattice> out;
        for (std::size_t n = 1; n <= max; ++n)
            for (auto& l : enumerate_lattices(n))
                out.push_back(std::move(l));
        return out;
    }
}

TEST_CASE("N5 dependency")
{
    auto l = fixtures::n5();
    auto d = join_dependency(l);
    auto expected = labelled(l, oracle::dependency(oracle::Order::of(l.order())));
    REQUIRE(expected == std::set<std::pair<std::string, std::string>>{{"b", "a"}, {"b", "c"}});
    CHECK(labelled(l, dependency_pairs(d, d.dependency)) == expected);
    CHECK(is_lower_bounded(d));
    CHECK(d.classes.size() == 3);
    auto mp = minimal_pairs(l);
    REQUIRE(mp.size() == 1);
    CHECK(l.label(mp[0].element) == "b");
    CHECK(mp[0].cover.size() == 2);
}

TEST_CASE("M3 dependency is complete")
{
    auto l = fixtures::m3();
    auto d = join_dependency(l);
    CHECK(d.dependency.pair_count() == 6);
    CHECK_FALSE(is_lower_bounded(l));
    CHECK(d.classes.size() == 1);
    CHECK(d.closure_order(l).size() == 3);
}

TEST_CASE("Boolean lattices have no dependency")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto l = fixtures::boolean(n);
        REQUIRE(oracle::dependency(oracle::Order::of(l.order())).empty());
        auto d = join_dependency(l);
        CHECK(d.dependency.pair_count() == 0);
        CHECK(minimal_pairs(l).empty());
        CHECK(is_lower_bounded(d));
    }
}

TEST_CASE("dependency and closures agree with the oracle on all lattices up to 7")
{
    for (const auto& l : all_lattices(7)) {
        auto o = oracle::Order::of(l.order());
        auto d = join_dependency(l);
        auto ji = oracle::join_irreducibles(o);
        auto od = oracle::dependency(o);
        REQUIRE(dependency_pairs(d, d.dependency) == od);
        CHECK(dependency_pairs(d, d.strict_closure) == oracle::closure(od, ji, false));
        CHECK(dependency_pairs(d, d.closure) == oracle::closure(od, ji, true));
        CHECK(is_lower_bounded(d) == ! oracle::has_cycle(od, ji));
        CHECK(dependency_invariant_violations(l, d).empty());
    }
}

TEST_CASE("minimal pairs agree with the literal definition")
{
    for (const auto& l : all_lattices(7)) {
        auto o = oracle::Order::of(l.order());
        std::set<std::pair<std::size_t, std::vector<std::size_t>>> got;
        for (const auto& mp : minimal_pairs(l)) {
            CHECK(mp.cover.size() >= 2);
            got.insert({mp.element, mp.cover});
        }
        REQUIRE(got == oracle::minimal_pairs(o));

        auto d = join_dependency(l);
        CHECK(dependency_via_minimal_pairs(l) == d.dependency);
        CHECK(oracle::dependency_from_minimal_pairs(o) == oracle::dependency(o));
    }
}

TEST_CASE("minimal pair enumeration is capped")
{
    Limits limits;
    limits.max_minimal_pair_base = 2;
    CHECK_THROWS_AS(minimal_pairs(fixtures::boolean(3), limits), SizeCapError);
}

TEST_CASE("position lookup")
{
    auto l = fixtures::n5();
    auto d = join_dependency(l);
    CHECK(d.position_of(l.bottom()) == std::nullopt);
    CHECK(d.position_of(d.base[2].element) == 2u);
}

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>
#include <lattice_forge/order.hpp>

#include <random>

using namespace lattice_forge;

TEST_CASE("relation closures")
{
    Relation r(4);
    r.set(0, 1);
    r.set(1, 2);
    r.set(2, 0);
    auto t = r.transitive_closure();
    CHECK(t.test(0, 0));
    CHECK(t.test(2, 1));
    CHECK_FALSE(t.test(0, 3));
    auto rt = r.reflexive_transitive_closure();
    CHECK(rt.test(3, 3));
    CHECK(rt.is_reflexive());
    CHECK(rt.is_transitive());
    CHECK_FALSE(rt.is_antisymmetric());
    CHECK(r.is_irreflexive());
    CHECK(r.transposed().test(1, 0));
    CHECK(rt.without_diagonal().pair_count() == 6);
    CHECK(members(r.column(0)) == std::vector<std::size_t>{2});
}

TEST_CASE("poset from pairs takes the reflexive-transitive closure")
{
    auto p = poset_from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(0, 2));
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.leq(2, 0));
    CHECK(covers(p) == std::vector<IndexPair>{{0, 1}, {1, 2}});
    CHECK(members(maximal_elements(p)) == std::vector<std::size_t>{2});
    CHECK(members(minimal_elements(p)) == std::vector<std::size_t>{0});
    CHECK(heights(p.relation()) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("cycles are reported with a path")
{
    try {
        poset_from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
        FAIL("expected CycleError");
    }
    catch (const CycleError& e) {
        CHECK(e.code() == ErrorCode::CycleViolatesAntisymmetry);
        REQUIRE(e.cycle().size() >= 3);
        CHECK(e.cycle().front() == e.cycle().back());
    }
}

TEST_CASE("label errors")
{
    auto code_of = [](auto&& fn) {
        try {
            fn();
        }
        catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code_of([] { poset_from_pairs({"a", "a"}, {}); }) == ErrorCode::DuplicateLabel);
    CHECK(code_of([] { poset_from_pairs({"a"}, {{"a", "z"}}); }) == ErrorCode::UnknownLabel);
}

TEST_CASE("quasi-order quotient")
{
    auto q = quasiorder_from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
    CHECK(q.equivalent(0, 1));
    auto quotient = quotient_poset(q);
    CHECK(quotient.poset.size() == 2);
    CHECK(quotient.projection == std::vector<std::size_t>{0, 0, 1});
    CHECK(quotient.poset.label(0) == "a~b");
    CHECK(quotient.poset.leq(0, 1));
}

TEST_CASE("upper segments and covers")
{
    auto p = fixtures::nosc();
    CHECK(upper_segment(p, 1).count() == 3);
    CHECK(members(upper_covers(p, 1)) == std::vector<std::size_t>{2, 3});
    CHECK(members(lower_covers(p, 1)) == std::vector<std::size_t>{0});
    CHECK(p.down_set(2).count() == 3);
}

TEST_CASE("isomorphism search agrees with the permutation oracle")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        auto a = random_quasi_order(rng, 6);
        auto b = random_quasi_order(rng, 6);
        if (a.size() != b.size())
            continue;
        auto found = is_isomorphic(a, b);
        CHECK(found.has_value() == oracle::isomorphic(oracle::Order::of(a), oracle::Order::of(b)));
        if (found)
            CHECK(is_isomorphism(a.relation(), b.relation(), *found));
    }
}

TEST_CASE("isomorphism of relabelled posets")
{
    auto p = fixtures::nosc();
    auto relabelled = poset_from_pairs({"w", "x", "y", "z"}, {{"y", "x"}, {"x", "w"}, {"x", "z"}});
    auto f = is_isomorphic(p, relabelled);
    REQUIRE(f);
    CHECK((*f)[1] == 1);
    CHECK_FALSE(is_isomorphic(p, chain(4)));
}

TEST_CASE("generated labels")
{
    CHECK(generated_label(0) == "a");
    CHECK(generated_label(25) == "z");
    CHECK(generated_label(26) == "x26");
    CHECK(chain(3).leq(0, 2));
    CHECK(antichain(3).relation() == Relation::identity(3));
}

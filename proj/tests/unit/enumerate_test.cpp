#include "doctest.h"
#include "oracle.hpp"

#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>

using namespace lattice_forge;

TEST_CASE("poset counts match the brute-force count")
{
    CHECK(enumerate_posets(0).size() == 1);
    CHECK(enumerate_posets(1).size() == 1);
    CHECK(enumerate_posets(2).size() == 2);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(enumerate_posets(n).size() == oracle::count_posets(n));
}

TEST_CASE("enumerated posets are pairwise non-isomorphic")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        auto ps = enumerate_posets(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t k = i + 1; k < ps.size(); ++k)
                REQUIRE_FALSE(is_isomorphic(ps[i], ps[k]));
    }
}

TEST_CASE("lattice counts match the brute-force count")
{
    CHECK(enumerate_lattices(0).empty());
    for (std::size_t n = 1; n <= 3; ++n)
        CHECK(enumerate_lattices(n).size() == 1);
    CHECK(enumerate_lattices(4).size() == 2);
    for (std::size_t n = 1; n <= 7; ++n)
        CHECK(enumerate_lattices(n).size() == oracle::count_lattices(n));
}

TEST_CASE("quasi-order counts match the brute-force count")
{
    CHECK(enumerate_quasi_orders(0).size() == 1);
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(enumerate_quasi_orders(n).size() == oracle::count_quasi_orders(n));
}

TEST_CASE("atomistic closure systems")
{
    CHECK(enumerate_atomistic_closure_systems(1).size() == 1);
    CHECK(enumerate_atomistic_closure_systems(2).size() == 1);
    for (std::size_t k = 1; k <= 4; ++k) {
        auto systems = enumerate_atomistic_closure_systems(k);
        CHECK(systems.size() == oracle::count_atomistic_closure_systems(k));
        if (k <= 3)
            for (const auto& l : systems)
                CHECK(oracle::is_atomistic(oracle::Order::of(l.order())));
    }
}

TEST_CASE("enumeration is deterministic")
{
    auto a = enumerate_posets(5);
    auto b = enumerate_posets(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].relation() == b[i].relation());
}

TEST_CASE("enumeration caps")
{
    CHECK_THROWS_AS(enumerate_posets(8), SizeCapError);
    CHECK_THROWS_AS(enumerate_lattices(9), SizeCapError);
    CHECK_THROWS_AS(enumerate_atomistic_closure_systems(5), SizeCapError);
}

TEST_CASE("random quasi-orders")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto q = random_quasi_order(rng, 9);
        CHECK(q.size() >= 1);
        CHECK(q.size() <= 9);
        CHECK(q.relation().is_reflexive());
        CHECK(q.relation().is_transitive());
    }
}

TEST_CASE("isomorphism classifier")
{
    IsomorphismClassifier c;
    CHECK(c.insert(chain(3).relation()));
    CHECK_FALSE(c.insert(chain(3).relation()));
    CHECK(c.insert(antichain(3).relation()));
    CHECK(c.size() == 2);
}

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>
#include <lattice_forge/lattice.hpp>

using namespace lattice_forge;

namespace {
    auto check_tables(const FiniteLattice& l)
    {
        auto o = oracle::Order::of(l.order());
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = 0; b < l.size(); ++b) {
                REQUIRE(l.join(a, b) == oracle::join(o, a, b));
                REQUIRE(l.meet(a, b) == oracle::meet(o, a, b));
            }
        CHECK(l.bottom() == oracle::bottom(o));
    }
}

TEST_CASE("join and meet tables match the order")
{
    check_tables(fixtures::n5());
    check_tables(fixtures::m3());
    check_tables(fixtures::boolean(3));
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& l : enumerate_lattices(n))
            check_tables(l);
}

TEST_CASE("join-irreducibles of N5")
{
    auto l = fixtures::n5();
    auto ji = join_irreducibles(l);
    REQUIRE(ji.size() == 3);
    CHECK(l.label(ji[0].element) == "a");
    CHECK(l.label(ji[1].element) == "b");
    CHECK(l.label(ji[1].lower_cover) == "a");
    CHECK(l.label(ji[2].element) == "c");
    CHECK(join_irreducible_poset(l).size() == 3);
}

TEST_CASE("lattice predicates agree with the oracle")
{
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& l : enumerate_lattices(n)) {
            auto o = oracle::Order::of(l.order());
            CHECK(is_atomistic(l) == oracle::is_atomistic(o));
            CHECK(is_sectionally_complemented(l) == oracle::is_sectionally_complemented(o));
            std::vector<std::size_t> ji;
            for (const auto& p : join_irreducibles(l))
                ji.push_back(p.element);
            CHECK(ji == oracle::join_irreducibles(o));
            CHECK(members(atoms(l)) == oracle::atoms(o));
        }
}

TEST_CASE("fixed lattices")
{
    CHECK_FALSE(is_atomistic(fixtures::n5()));
    CHECK_FALSE(is_distributive(fixtures::n5()));
    CHECK(is_atomistic(fixtures::m3()));
    CHECK(is_sectionally_complemented(fixtures::m3()));
    CHECK_FALSE(is_distributive(fixtures::m3()));
    CHECK(is_distributive(fixtures::boolean(3)));
    CHECK(is_distributive(fixtures::chain_lattice(4)));
    CHECK_FALSE(is_atomistic(fixtures::chain_lattice(3)));
}

TEST_CASE("lattice_from_poset rejects non-lattices")
{
    // two maximal elements over a common pair: a, b < c, d
    auto p = poset_from_pairs({"0", "a", "b", "c", "d", "1"},
        {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
    try {
        lattice_from_poset(p);
        FAIL("expected NotALatticeError");
    }
    catch (const NotALatticeError& e) {
        CHECK(e.code() == ErrorCode::NotALattice);
        CHECK(e.witnesses().size() == 2);
    }
    CHECK_THROWS_AS(lattice_from_poset(antichain(2)), NotALatticeError);
    CHECK_THROWS_AS(lattice_from_poset(Poset{}), NotALatticeError);
}

TEST_CASE("lattice size cap")
{
    Limits limits;
    limits.max_lattice_elements = 4;
    CHECK_THROWS_AS(lattice_from_poset(chain(5), limits), SizeCapError);
    CHECK_NOTHROW(lattice_from_poset(chain(4), limits));
}

TEST_CASE("closure systems")
{
    auto l = closure_system_lattice_from_masks(2, {0b00, 0b01, 0b10, 0b11});
    CHECK(l.size() == 4);
    CHECK(l.label(3) == "{a,b}");
    CHECK(subset_label(0, {"a"}) == "{}");

    auto code_of = [](auto&& fn) {
        try {
            fn();
        }
        catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code_of([] { closure_system_lattice_from_masks(2, {0b00, 0b01}); }) == ErrorCode::MissingTop);
    CHECK(code_of([] { closure_system_lattice_from_masks(3, {0b011, 0b110, 0b111}); }) ==
        ErrorCode::NotIntersectionClosed);

    std::vector<ElementSet> family{ElementSet(2, 0), ElementSet(2, 1), ElementSet(2, 3)};
    CHECK(closure_system_lattice(2, family).size() == 3);
}

TEST_CASE("hereditary lattice size equals the down-set count")
{
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) {
            auto h = hereditary_lattice(p);
            CHECK(h.size() == oracle::down_set_count(oracle::Order::of(p)));
            CHECK(is_distributive(h));
            CHECK(oracle::isomorphic(oracle::Order::of(join_irreducible_poset(h)), oracle::Order::of(p)));
        }
    CHECK(hereditary_lattice(fixtures::nosc()).size() == 6);
}

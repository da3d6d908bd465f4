#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <lattice_forge/congruence.hpp>
#include <lattice_forge/enumerate.hpp>

using namespace lattice_forge;

namespace {
    auto as_matrix(const Congruence& c) -> oracle::Matrix
    {
        oracle::Matrix m(c.size(), std::vector<char>(c.size(), 0));
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b)
                m[a][b] = c.same(a, b);
        return m;
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

TEST_CASE("congruence basics")
{
    auto id = Congruence::identity(3);
    auto all = Congruence::total(3);
    CHECK(id.class_count() == 3);
    CHECK(all.class_count() == 1);
    CHECK(id.refines(all));
    CHECK_FALSE(all.refines(id));
    CHECK(Congruence({5, 5, 7}) == Congruence({0, 0, 2}));
    CHECK(Congruence({0, 0, 2}).classes() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
}

TEST_CASE("N5 has five congruences")
{
    auto l = fixtures::n5();
    auto con = congruence_lattice(l);
    auto brute = oracle::congruences_by_partitions(oracle::Order::of(l.order()));
    REQUIRE(brute.size() == 5);
    CHECK(con.lattice.size() == 5);
    CHECK(con.congruences[0] == Congruence::identity(5));
    CHECK(je(l) == 0);
    CHECK(con.index_of(Congruence::total(5)).has_value());
}

TEST_CASE("M3 is simple")
{
    auto l = fixtures::m3();
    REQUIRE(oracle::congruences_by_partitions(oracle::Order::of(l.order())).size() == 2);
    CHECK(congruence_lattice(l).lattice.size() == 2);
    CHECK(je(l) == 2);
}

TEST_CASE("Boolean lattices: Con is Boolean")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto l = fixtures::boolean(n);
        CHECK(congruence_lattice(l).lattice.size() == (std::size_t{1} << n));
        CHECK(je(l) == 0);
    }
}

TEST_CASE("principal congruences match the matrix closure")
{
    for (const auto& l : all_lattices(6)) {
        auto o = oracle::Order::of(l.order());
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = a + 1; b < l.size(); ++b) {
                auto c = principal_congruence(l, a, b);
                REQUIRE(as_matrix(c) == oracle::principal_congruence(o, a, b));
                CHECK(is_compatible(l, c));
            }
    }
}

TEST_CASE("congruence lattice is every compatible partition")
{
    for (const auto& l : all_lattices(7)) {
        auto o = oracle::Order::of(l.order());
        auto brute = oracle::partitions_as_matrices(oracle::congruences_by_partitions(o));
        REQUIRE(brute == oracle::congruences_by_closure(o));

        auto con = congruence_lattice(l);
        std::vector<oracle::Matrix> got;
        for (const auto& c : con.congruences)
            got.push_back(as_matrix(c));
        std::sort(got.begin(), got.end());
        REQUIRE(got == brute);

        std::vector<oracle::Matrix> in_order;
        for (const auto& c : con.congruences)
            in_order.push_back(as_matrix(c));
        auto expected = oracle::containment(in_order);
        for (std::size_t i = 0; i < con.lattice.size(); ++i)
            for (std::size_t k = 0; k < con.lattice.size(); ++k)
                REQUIRE(con.lattice.leq(i, k) == static_cast<bool>(expected.leq[i][k]));
        CHECK(is_distributive(con.lattice));
    }
}

TEST_CASE("congruence join")
{
    auto l = fixtures::n5();
    auto a = principal_congruence(l, 0, 1);
    auto c = principal_congruence(l, 0, 3);
    auto j = congruence_join(l, a, c);
    CHECK(a.refines(j));
    CHECK(c.refines(j));
    CHECK(is_compatible(l, j));
}

TEST_CASE("fast J(Con L) and Theta agree with the brute-force congruence lattice")
{
    for (const auto& l : all_lattices(7)) {
        auto o = oracle::Order::of(l.order());
        auto fast = con_ji_poset_fast(l);
        REQUIRE(oracle::isomorphic(oracle::Order::of(fast), oracle::con_join_irreducibles(o)));

        auto d = join_dependency(l);
        auto theta = theta_map(l);
        for (std::size_t p = 0; p < d.base.size(); ++p) {
            auto expected = oracle::principal_congruence(o, d.base[p].lower_cover, d.base[p].element);
            REQUIRE(as_matrix(theta.theta[p]) == expected);
            for (std::size_t q = 0; q < d.base.size(); ++q)
                CHECK(theta.theta[p].refines(theta.theta[q]) == d.closure.test(p, q));
        }
        CHECK(je(l) == d.base.size() - oracle::con_join_irreducibles(o).n);
    }
}

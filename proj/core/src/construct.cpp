#include <lattice_forge/congruence.hpp>
#include <lattice_forge/construct.hpp>
#include <lattice_forge/dependency.hpp>
#include <lattice_forge/error.hpp>
#include <lattice_forge/spike.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lattice_forge {

auto to_string(Provenance p) -> const char*
{
    switch (p) {
        case Provenance::ClosedSets: return "closed-sets";
        case Provenance::Optimal: return "optimal";
        case Provenance::Partition: return "partition";
    }
    return "unknown";
}

auto check_condition_iii(const QuasiOrder& q) -> ConditionCheck
{
    for (std::size_t p = 0; p < q.size(); ++p)
        if (upper_segment(q, p).count() == 2)
            return {false, p};
    return {true, std::nullopt};
}

auto is_closed(const QuasiOrder& q, const ElementSet& x) -> bool
{
    auto down = q.relation().transposed();
    ElementSet seen(q.size());
    bool closed = true;
    for_each_member(x, [&](std::size_t y) {
        ElementSet common = down.row(y) & seen;
        if (! common.is_subset_of(x))
            closed = false;
        seen |= down.row(y);
    });
    return closed;
}

auto one_step_closure(const QuasiOrder& q, const ElementSet& x) -> ElementSet
{
    auto down = q.relation().transposed();
    ElementSet result = x;
    ElementSet seen(q.size());
    for_each_member(x, [&](std::size_t y) {
        result |= down.row(y) & seen;
        seen |= down.row(y);
    });
    if (! is_closed(q, result))
        throw InvariantViolation("one-step closure is not closed");
    return result;
}

namespace {
    auto check_realization(const QuasiOrder& q, const Realization& r) -> void
    {
        const auto& l = r.lattice;
        if (! is_atomistic(l))
            throw InvariantViolation("closed-set lattice is not atomistic");
        auto at = atoms(l);
        if (at.count() != q.size())
            throw InvariantViolation("closed-set lattice has the wrong number of atoms");
        for (auto a : r.atom_of)
            if (! at.test(a))
                throw InvariantViolation("singleton is not an atom");

        auto d = join_dependency(l);
        std::vector<std::size_t> pos(q.size());
        for (std::size_t p = 0; p < q.size(); ++p)
            pos[p] = *d.position_of(r.atom_of[p]);
        for (std::size_t p = 0; p < q.size(); ++p)
            for (std::size_t x = 0; x < q.size(); ++x) {
                if (d.closure.test(pos[p], pos[x]) != q.leq(p, x))
                    throw InvariantViolation("closed dependency order of atoms differs from the input at " +
                        q.label(p) + "," + q.label(x));
                if (d.dependency.test(pos[p], pos[x]) != (q.leq(p, x) && p != x))
                    throw InvariantViolation("dependency of atoms differs from the strict input order at " +
                        q.label(p) + "," + q.label(x));
            }
    }
}

auto closed_sets_lattice(const QuasiOrder& q, const Limits& limits) -> Realization
{
    const auto n = q.size();
    if (auto check = check_condition_iii(q); ! check.holds) {
        std::vector<std::string> segment;
        for_each_member(upper_segment(q, *check.witness), [&](std::size_t x) { segment.push_back(q.label(x)); });
        throw ConditionViolatedError(*check.witness, q.label(*check.witness), std::move(segment));
    }
    if (n > limits.max_ground || n >= 32)
        throw SizeCapError("closed subsets", n, std::min<std::size_t>(limits.max_ground, 31));

    std::vector<std::uint32_t> below(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t p = 0; p < n; ++p)
            if (q.leq(p, x))
                below[x] |= 1U << p;

    std::vector<std::uint32_t> family;
    const std::size_t space = std::size_t{1} << n;
    for (std::size_t s = 0; s < space; ++s) {
        auto mask = static_cast<std::uint32_t>(s);
        std::uint32_t seen = 0;
        bool closed = true;
        for (std::size_t x = 0; x < n && closed; ++x) {
            if (! (mask >> x & 1U))
                continue;
            closed = (below[x] & seen & ~mask) == 0;
            seen |= below[x];
        }
        if (closed) {
            family.push_back(mask);
            if (family.size() > limits.max_lattice_elements)
                throw SizeCapError("lattice", family.size(), limits.max_lattice_elements);
        }
    }

    auto lattice = closure_system_lattice_from_masks(n, family, q.labels(), limits);
    // closure_system_lattice_from_masks orders elements by mask, as here.
    std::vector<std::size_t> atom_of(n);
    for (std::size_t p = 0; p < n; ++p)
        atom_of[p] = static_cast<std::size_t>(std::lower_bound(family.begin(), family.end(), 1U << p) - family.begin());

    Realization r{std::move(lattice), std::move(atom_of), std::move(family), Provenance::ClosedSets};
    check_realization(q, r);
    return r;
}

auto optimal_q(const Poset& p) -> OptimalQ
{
    const auto n = p.size();
    auto report = spike_report(p);

    ElementSet doubled(n);
    for (const auto& s : report.spikes)
        if (report.unique_boundary.test(s.top))
            doubled.set(s.bottom);
    ElementSet tripled = report.multi_boundary;
    ElementSet plain = ~(doubled | tripled);

    OptimalQ out{{}, {}, {}, plain, doubled, tripled};
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        unsigned copies = doubled.test(x) ? 2 : tripled.test(x) ? 3 : 1;
        for (unsigned c = 0; c < copies; ++c) {
            out.projection.push_back(x);
            if (copies == 1) {
                out.origin.push_back({x, std::nullopt});
                labels.push_back(p.label(x));
            }
            else {
                out.origin.push_back({x, c});
                labels.push_back(p.label(x) + "." + std::to_string(c));
            }
        }
    }

    const auto m = out.projection.size();
    Relation rel(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (p.leq(out.projection[a], out.projection[b]))
                rel.set(a, b);
    out.q = QuasiOrder(std::move(labels), std::move(rel));

    if (m != n + report.alpha)
        throw InvariantViolation("optimal quasi-order has the wrong size");
    if (! check_condition_iii(out.q).holds)
        throw InvariantViolation("optimal quasi-order has a two-element upper segment");
    return out;
}

auto construct_optimal(const Poset& p, const Limits& limits) -> Realization
{
    auto q = optimal_q(p);
    auto r = closed_sets_lattice(q.q, limits);
    r.provenance = Provenance::Optimal;

    auto d = join_dependency(r.lattice);
    if (d.base.size() != p.size() + spike_report(p).alpha)
        throw InvariantViolation("optimal realization has the wrong number of join-irreducibles");
    if (! is_isomorphic(con_ji_poset_fast(r.lattice, d), p))
        throw InvariantViolation("J(Con L) is not isomorphic to the input poset");
    auto con = congruence_lattice(r.lattice, limits);
    auto h = hereditary_lattice(p, limits);
    if (! is_isomorphic(con.lattice.order(), h.order()))
        throw InvariantViolation("Con L is not isomorphic to the hereditary-subset lattice");
    return r;
}

auto realize_partition(const std::vector<std::string>& labels, const std::vector<std::size_t>& class_of)
    -> QuasiOrder
{
    const auto n = labels.size();
    if (class_of.size() != n)
        throw std::invalid_argument("class assignment does not match the label count");
    if (n == 0)
        return QuasiOrder({}, Relation(0));

    std::map<std::size_t, std::size_t> class_size;
    for (auto c : class_of)
        ++class_size[c];

    std::optional<std::size_t> anchor;
    for (std::size_t x = 0; x < n && ! anchor; ++x)
        if (class_size[class_of[x]] != 2)
            anchor = x;
    if (! anchor)
        throw Error(ErrorCode::AllClassesSize2, "every class has exactly two elements");

    Relation rel(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (class_of[x] == class_of[y] || (class_size[class_of[x]] == 2 && class_of[y] == class_of[*anchor]))
                rel.set(x, y);

    if (! rel.is_reflexive() || ! rel.is_transitive())
        throw InvariantViolation("partition realization is not a quasi-order");
    QuasiOrder q(labels, std::move(rel));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (q.equivalent(x, y) != (class_of[x] == class_of[y]))
                throw InvariantViolation("partition realization changes the equivalence classes");
    if (! check_condition_iii(q).holds)
        throw InvariantViolation("partition realization has a two-element upper segment");
    return q;
}

}

#include <lattice_forge/dependency.hpp>
#include <lattice_forge/error.hpp>

#include <algorithm>
#include <sstream>

namespace lattice_forge {

auto DependencyData::position_of(std::size_t lattice_element) const -> std::optional<std::size_t>
{
    for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i].element == lattice_element)
            return i;
    return std::nullopt;
}

auto DependencyData::closure_order(const FiniteLattice& l) const -> QuasiOrder
{
    std::vector<std::string> labels;
    for (auto [x, lower] : base)
        labels.push_back(l.label(x));
    return QuasiOrder(Trusted{}, std::move(labels), closure);
}

auto join_dependency(const FiniteLattice& l) -> DependencyData
{
    DependencyData d;
    d.base = join_irreducibles(l);
    const auto k = d.base.size();
    d.dependency = Relation(k);

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            auto p = d.base[i].element, q = d.base[j].element, q_low = d.base[j].lower_cover;
            for (std::size_t x = 0; x < l.size(); ++x)
                if (l.leq(p, l.join(q, x)) && ! l.leq(p, l.join(q_low, x))) {
                    d.dependency.set(i, j);
                    break;
                }
        }

    d.strict_closure = d.dependency.transitive_closure();
    d.closure = d.dependency.reflexive_transitive_closure();

    d.class_of.assign(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (d.class_of[i] != k)
            continue;
        d.classes.emplace_back();
        for (std::size_t j = i; j < k; ++j)
            if (d.closure.test(i, j) && d.closure.test(j, i)) {
                d.class_of[j] = d.classes.size() - 1;
                d.classes.back().push_back(j);
            }
    }

    auto problems = dependency_invariant_violations(l, d);
    if (! problems.empty())
        throw InvariantViolation("join dependency: " + problems.front());
    return d;
}

auto dependency_invariant_violations(const FiniteLattice& l, const DependencyData& d) -> std::vector<std::string>
{
    std::vector<std::string> out;
    const auto k = d.base.size();
    auto name = [&](std::size_t i) { return l.label(d.base[i].element); };

    for (std::size_t i = 0; i < k; ++i) {
        if (d.dependency.test(i, i))
            out.push_back("D is reflexive at " + name(i));
        for (std::size_t j = 0; j < k; ++j) {
            if (d.dependency.test(i, j) && l.leq(d.base[i].element, d.base[j].element))
                out.push_back(name(i) + " D " + name(j) + " although " + name(i) + " <= " + name(j));

            bool reflexive_from_strict = d.strict_closure.test(i, j) || i == j;
            if (d.closure.test(i, j) != reflexive_from_strict)
                out.push_back("closure and strict closure disagree off the diagonal at " + name(i) + "," + name(j));

            bool strict_from_reflexive = (d.closure.test(i, j) && i != j) || (i == j && d.classes[d.class_of[i]].size() >= 2);
            if (d.strict_closure.test(i, j) != strict_from_reflexive)
                out.push_back("strict closure is not determined by the reflexive closure at " + name(i) + "," + name(j));
        }

        if (d.strict_closure.test(i, i)) {
            bool witnessed = false;
            for (std::size_t x = 0; x < k && ! witnessed; ++x)
                witnessed = x != i && d.strict_closure.test(i, x) && d.strict_closure.test(x, i);
            if (! witnessed)
                out.push_back("strict self-loop at " + name(i) + " without a cycle partner");
        }

        if (d.closure.row(i).count() == 2)
            out.push_back("upper segment of " + name(i) + " has exactly two elements");
    }
    return out;
}

auto minimal_pairs(const FiniteLattice& l, const Limits& limits) -> std::vector<MinimalPair>
{
    auto base = join_irreducibles(l);
    const auto k = base.size();
    if (k > limits.max_minimal_pair_base || k >= 32)
        throw SizeCapError("minimal pairs over J(L)", k, std::min<std::size_t>(limits.max_minimal_pair_base, 31));

    const std::size_t space = std::size_t{1} << k;
    std::vector<std::uint32_t> join_of_mask(space);
    join_of_mask[0] = static_cast<std::uint32_t>(l.bottom());
    for (std::size_t m = 1; m < space; ++m) {
        auto low = static_cast<std::size_t>(__builtin_ctzll(m));
        join_of_mask[m] = static_cast<std::uint32_t>(l.join(join_of_mask[m & (m - 1)], base[low].element));
    }

    std::vector<std::uint32_t> below(k, 0);
    for (std::size_t y = 0; y < k; ++y)
        for (std::size_t x = 0; x < k; ++x)
            if (l.leq(base[x].element, base[y].element))
                below[y] |= 1U << x;

    // <p,I> is minimal iff p <= V I and, writing D for the J(L)-elements
    // below some member of I (exactly the sets dominated by I are the
    // subsets of D), p !<= V(D - {y}) for every y in I. A dominated set
    // missing y lies inside D - {y}, and joins are monotone.
    std::vector<MinimalPair> out;
    for (std::size_t i = 0; i < k; ++i) {
        auto p = base[i].element;
        for (std::size_t m = 1; m < space; ++m) {
            if (m >> i & 1U)
                continue;
            if (! l.leq(p, join_of_mask[m]))
                continue;
            std::uint32_t dominated = 0;
            for (std::size_t y = 0; y < k; ++y)
                if (m >> y & 1U)
                    dominated |= below[y];
            bool minimal = true;
            for (std::size_t y = 0; y < k && minimal; ++y)
                if (m >> y & 1U)
                    minimal = ! l.leq(p, join_of_mask[dominated & ~(1U << y)]);
            if (! minimal)
                continue;
            MinimalPair pair{p, {}};
            for (std::size_t y = 0; y < k; ++y)
                if (m >> y & 1U)
                    pair.cover.push_back(base[y].element);
            out.push_back(std::move(pair));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto dependency_via_minimal_pairs(const FiniteLattice& l, const Limits& limits) -> Relation
{
    auto base = join_irreducibles(l);
    std::vector<std::size_t> position(l.size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        position[base[i].element] = i;

    Relation r(base.size());
    for (const auto& [p, cover] : minimal_pairs(l, limits))
        for (auto q : cover)
            r.set(position[p], position[q]);
    return r;
}

auto is_lower_bounded(const DependencyData& d) -> bool
{
    return d.strict_closure.is_irreflexive();
}

auto is_lower_bounded(const FiniteLattice& l) -> bool
{
    return is_lower_bounded(join_dependency(l));
}

}

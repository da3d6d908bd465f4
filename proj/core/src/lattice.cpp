#include <lattice_forge/error.hpp>
#include <lattice_forge/lattice.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lattice_forge {

FiniteLattice::FiniteLattice(Trusted, Poset order, std::vector<std::uint32_t> join, std::vector<std::uint32_t> meet,
    std::size_t bottom, std::size_t top) :
    _order(std::move(order)), _join(std::move(join)), _meet(std::move(meet)), _bottom(bottom), _top(top)
{
}

auto FiniteLattice::join_of(const ElementSet& elements) const -> std::size_t
{
    std::size_t acc = _bottom;
    for_each_member(elements, [&](std::size_t x) { acc = join(acc, x); });
    return acc;
}

auto FiniteLattice::join_of(std::span<const std::size_t> elements) const -> std::size_t
{
    std::size_t acc = _bottom;
    for (auto x : elements)
        acc = join(acc, x);
    return acc;
}

namespace {
    auto labels_of(const Poset& p, const ElementSet& s) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for_each_member(s, [&](std::size_t x) { out.push_back(p.label(x)); });
        return out;
    }

    /// Members of s that are minimal (or maximal) within s.
    auto extremal_within(const Poset& p, const ElementSet& s, bool minimal) -> ElementSet
    {
        ElementSet out(p.size());
        for_each_member(s, [&](std::size_t x) {
            bool extremal = true;
            for_each_member(s, [&](std::size_t y) {
                if (y != x && (minimal ? p.leq(y, x) : p.leq(x, y)))
                    extremal = false;
            });
            if (extremal)
                out.set(x);
        });
        return out;
    }
}

auto lattice_from_poset(const Poset& p, const Limits& limits) -> FiniteLattice
{
    const auto n = p.size();
    if (n > limits.max_lattice_elements)
        throw SizeCapError("lattice", n, limits.max_lattice_elements);
    if (n == 0)
        throw NotALatticeError(NotALatticeError::Missing::Bottom, "", "", {});

    // Positions in a linear extension (sort by down-set size): the least
    // element of any subset, if it has one, is its first member there.
    std::vector<std::size_t> down_count(n), by_pos(n), pos(n);
    Relation down = p.relation().transposed();
    for (std::size_t x = 0; x < n; ++x)
        down_count[x] = down.row(x).count();
    std::iota(by_pos.begin(), by_pos.end(), 0);
    std::stable_sort(by_pos.begin(), by_pos.end(), [&](auto a, auto b) { return down_count[a] < down_count[b]; });
    for (std::size_t i = 0; i < n; ++i)
        pos[by_pos[i]] = i;

    auto permute = [&](const ElementSet& s) {
        ElementSet t(n);
        for_each_member(s, [&](std::size_t x) { t.set(pos[x]); });
        return t;
    };
    std::vector<ElementSet> up_t(n), down_t(n);
    for (std::size_t x = 0; x < n; ++x) {
        up_t[x] = permute(p.up_set(x));
        down_t[x] = permute(down.row(x));
    }

    std::size_t bottom = n, top = n;
    for (std::size_t x = 0; x < n; ++x) {
        if (p.up_set(x).count() == n)
            bottom = x;
        if (down_count[x] == n)
            top = x;
    }
    if (bottom == n)
        throw NotALatticeError(NotALatticeError::Missing::Bottom, "", "", {});

    std::vector<std::uint32_t> join(n * n), meet(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            ElementSet ub = up_t[a] & up_t[b];
            auto first = ub.find_first();
            if (first == ElementSet::npos || ! ub.is_subset_of(up_t[by_pos[first]])) {
                ElementSet real(n);
                for_each_member(ub, [&](std::size_t i) { real.set(by_pos[i]); });
                throw NotALatticeError(NotALatticeError::Missing::Join, p.label(a), p.label(b),
                    labels_of(p, extremal_within(p, real, true)));
            }
            join[a * n + b] = join[b * n + a] = static_cast<std::uint32_t>(by_pos[first]);

            ElementSet lb = down_t[a] & down_t[b];
            auto last = ElementSet::npos;
            for (auto i = lb.find_first(); i != ElementSet::npos; i = lb.find_next(i))
                last = i;
            if (last == ElementSet::npos || ! lb.is_subset_of(down_t[by_pos[last]])) {
                ElementSet real(n);
                for_each_member(lb, [&](std::size_t i) { real.set(by_pos[i]); });
                throw NotALatticeError(NotALatticeError::Missing::Meet, p.label(a), p.label(b),
                    labels_of(p, extremal_within(p, real, false)));
            }
            meet[a * n + b] = meet[b * n + a] = static_cast<std::uint32_t>(by_pos[last]);
        }

    return FiniteLattice(Trusted{}, p, std::move(join), std::move(meet), bottom, top);
}

auto join_irreducibles(const FiniteLattice& l) -> std::vector<JoinIrreducible>
{
    // x is join-irreducible iff the join of everything strictly below it is
    // not x itself; that join is then the unique lower cover.
    std::vector<JoinIrreducible> out;
    for (std::size_t x = 0; x < l.size(); ++x) {
        if (x == l.bottom())
            continue;
        std::size_t below = l.bottom();
        for (std::size_t y = 0; y < l.size(); ++y)
            if (l.less(y, x))
                below = l.join(below, y);
        if (below != x)
            out.push_back({x, below});
    }
    return out;
}

auto join_irreducible_poset(const FiniteLattice& l) -> Poset
{
    auto ji = join_irreducibles(l);
    Relation leq(ji.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ji.size(); ++i) {
        labels.push_back(l.label(ji[i].element));
        for (std::size_t j = 0; j < ji.size(); ++j)
            if (l.leq(ji[i].element, ji[j].element))
                leq.set(i, j);
    }
    return Poset(Trusted{}, std::move(labels), std::move(leq));
}

auto atoms(const FiniteLattice& l) -> ElementSet
{
    ElementSet out(l.size());
    for (auto [x, lower] : join_irreducibles(l))
        if (lower == l.bottom())
            out.set(x);
    return out;
}

auto is_atomistic(const FiniteLattice& l) -> bool
{
    auto at = atoms(l);
    for (std::size_t x = 0; x < l.size(); ++x) {
        std::size_t acc = l.bottom();
        for_each_member(at, [&](std::size_t a) {
            if (l.leq(a, x))
                acc = l.join(acc, a);
        });
        if (acc != x)
            return false;
    }
    return true;
}

auto is_sectionally_complemented(const FiniteLattice& l) -> bool
{
    const auto n = l.size();
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a) {
            if (! l.leq(a, b))
                continue;
            bool found = false;
            for (std::size_t c = 0; c < n && ! found; ++c)
                found = l.leq(c, b) && l.meet(a, c) == l.bottom() && l.join(a, c) == b;
            if (! found)
                return false;
        }
    return true;
}

auto is_distributive(const FiniteLattice& l) -> bool
{
    const auto n = l.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return false;
    return true;
}

auto subset_label(std::uint32_t mask, const std::vector<std::string>& ground_labels) -> std::string
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < ground_labels.size(); ++i)
        if (mask >> i & 1U) {
            if (! first)
                out += ",";
            out += ground_labels[i];
            first = false;
        }
    return out + "}";
}

auto closure_system_lattice_from_masks(std::size_t ground_size, std::vector<std::uint32_t> family,
    const std::vector<std::string>& ground_labels, const Limits& limits) -> FiniteLattice
{
    if (ground_size > limits.max_ground || ground_size >= 32)
        throw SizeCapError("closure system ground set", ground_size, std::min<std::size_t>(limits.max_ground, 31));
    std::vector<std::string> names = ground_labels;
    if (names.empty())
        for (std::size_t i = 0; i < ground_size; ++i)
            names.push_back(generated_label(i));
    if (names.size() != ground_size)
        throw std::invalid_argument("ground label count does not match ground size");

    const std::uint32_t full = ground_size == 0 ? 0U : static_cast<std::uint32_t>((1ULL << ground_size) - 1);
    for (auto m : family)
        if (m & ~full)
            throw std::invalid_argument("family member outside the ground set");

    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty() || family.back() != full)
        throw Error(ErrorCode::MissingTop, "closure system does not contain the ground set");
    const auto n = family.size();
    if (n > limits.max_lattice_elements)
        throw SizeCapError("lattice", n, limits.max_lattice_elements);

    const std::size_t space = std::size_t{1} << ground_size;
    constexpr auto absent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(space, absent);
    for (std::size_t i = 0; i < n; ++i)
        index[family[i]] = static_cast<std::uint32_t>(i);

    // hull[X] = intersection of all members containing X (superset DP).
    std::vector<std::uint32_t> hull(space, full);
    for (auto m : family)
        hull[m] = m;
    for (std::size_t bit = 0; bit < ground_size; ++bit)
        for (std::size_t x = 0; x < space; ++x)
            if (! (x >> bit & 1U))
                hull[x] &= hull[x | (std::size_t{1} << bit)];

    // The family is intersection-closed iff every hull is a member.
    for (std::size_t x = 0; x < space; ++x) {
        if (index[hull[x]] != absent)
            continue;
        std::uint32_t acc = full;
        for (auto m : family) {
            if ((m & x) != x)
                continue;
            if (index[acc & m] == absent)
                throw Error(ErrorCode::NotIntersectionClosed, "intersection of " + subset_label(acc, names) +
                        " and " + subset_label(m, names) + " is not in the family");
            acc &= m;
        }
    }

    Relation leq(n);
    std::vector<std::string> labels;
    labels.reserve(n);
    std::vector<std::uint32_t> join(n * n), meet(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(subset_label(family[a], names));
        for (std::size_t b = 0; b < n; ++b) {
            if ((family[a] & ~family[b]) == 0)
                leq.set(a, b);
            join[a * n + b] = index[hull[family[a] | family[b]]];
            meet[a * n + b] = index[family[a] & family[b]];
        }
    }
    auto bottom = index[hull[0]];
    auto top = index[full];
    return FiniteLattice(Trusted{}, Poset(Trusted{}, std::move(labels), std::move(leq)), std::move(join),
        std::move(meet), bottom, top);
}

auto closure_system_lattice(std::size_t ground_size, std::span<const ElementSet> family,
    const std::vector<std::string>& ground_labels, const Limits& limits) -> FiniteLattice
{
    if (ground_size > limits.max_ground || ground_size >= 32)
        throw SizeCapError("closure system ground set", ground_size, std::min<std::size_t>(limits.max_ground, 31));
    std::vector<std::uint32_t> masks;
    masks.reserve(family.size());
    for (const auto& s : family) {
        if (s.size() != ground_size)
            throw std::invalid_argument("family member has the wrong ground size");
        std::uint32_t m = 0;
        for_each_member(s, [&](std::size_t i) { m |= 1U << i; });
        masks.push_back(m);
    }
    return closure_system_lattice_from_masks(ground_size, std::move(masks), ground_labels, limits);
}

auto hereditary_lattice(const Poset& p, const Limits& limits) -> FiniteLattice
{
    const auto n = p.size();
    if (n > limits.max_ground || n >= 32)
        throw SizeCapError("hereditary subsets", n, std::min<std::size_t>(limits.max_ground, 31));
    std::vector<std::uint32_t> below(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (p.leq(y, x))
                below[x] |= 1U << y;

    std::vector<std::uint32_t> family;
    const std::size_t space = std::size_t{1} << n;
    for (std::size_t s = 0; s < space; ++s) {
        auto mask = static_cast<std::uint32_t>(s);
        bool down_closed = true;
        for (std::size_t x = 0; x < n && down_closed; ++x)
            if (mask >> x & 1U)
                down_closed = (below[x] & ~mask) == 0;
        if (down_closed) {
            family.push_back(mask);
            if (family.size() > limits.max_lattice_elements)
                throw SizeCapError("lattice", family.size(), limits.max_lattice_elements);
        }
    }
    return closure_system_lattice_from_masks(n, std::move(family), p.labels(), limits);
}

}

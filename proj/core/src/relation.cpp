#include <lattice_forge/relation.hpp>

namespace lattice_forge {

std::vector<std::size_t> members(const ElementSet& set)
{
    std::vector<std::size_t> out;
    out.reserve(set.count());
    for_each_member(set, [&](std::size_t i) { out.push_back(i); });
    return out;
}

Relation::Relation(std::size_t n) : _rows(n, ElementSet(n))
{
}

auto Relation::identity(std::size_t n) -> Relation
{
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
        r.set(i, i);
    return r;
}

auto Relation::column(std::size_t i) const -> ElementSet
{
    ElementSet col(size());
    for (std::size_t j = 0; j < size(); ++j)
        if (_rows[j].test(i))
            col.set(j);
    return col;
}

auto Relation::transposed() const -> Relation
{
    Relation t(size());
    for (std::size_t i = 0; i < size(); ++i)
        for_each_member(_rows[i], [&](std::size_t j) { t.set(j, i); });
    return t;
}

auto Relation::transitive_closure() const -> Relation
{
    // Warshall, one row-or per (k, i) pair with i R k.
    Relation c = *this;
    for (std::size_t k = 0; k < size(); ++k)
        for (std::size_t i = 0; i < size(); ++i)
            if (c._rows[i].test(k))
                c._rows[i] |= c._rows[k];
    return c;
}

auto Relation::reflexive_transitive_closure() const -> Relation
{
    Relation c = transitive_closure();
    for (std::size_t i = 0; i < size(); ++i)
        c.set(i, i);
    return c;
}

auto Relation::without_diagonal() const -> Relation
{
    Relation c = *this;
    for (std::size_t i = 0; i < size(); ++i)
        c.set(i, i, false);
    return c;
}

auto Relation::is_reflexive() const -> bool
{
    for (std::size_t i = 0; i < size(); ++i)
        if (! test(i, i))
            return false;
    return true;
}

auto Relation::is_irreflexive() const -> bool
{
    for (std::size_t i = 0; i < size(); ++i)
        if (test(i, i))
            return false;
    return true;
}

auto Relation::is_antisymmetric() const -> bool
{
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (test(i, j) && test(j, i))
                return false;
    return true;
}

auto Relation::is_transitive() const -> bool
{
    for (std::size_t i = 0; i < size(); ++i) {
        ElementSet reach = _rows[i];
        for_each_member(_rows[i], [&](std::size_t k) { reach |= _rows[k]; });
        if (reach != _rows[i])
            return false;
    }
    return true;
}

auto Relation::pair_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto& r : _rows)
        total += r.count();
    return total;
}

}

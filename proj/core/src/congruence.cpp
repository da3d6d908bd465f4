#include <lattice_forge/congruence.hpp>
#include <lattice_forge/error.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace lattice_forge {

namespace {
    class UnionFind
    {
      public:
        explicit UnionFind(std::size_t n) : _parent(n) { std::iota(_parent.begin(), _parent.end(), 0U); }

        auto find(std::uint32_t x) -> std::uint32_t
        {
            while (_parent[x] != x)
                x = _parent[x] = _parent[_parent[x]];
            return x;
        }

        /// True if a merge happened.
        auto unite(std::uint32_t a, std::uint32_t b) -> bool
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            if (a < b)
                _parent[b] = a;
            else
                _parent[a] = b;
            return true;
        }

        auto partition() -> Congruence
        {
            std::vector<std::uint32_t> ids(_parent.size());
            for (std::uint32_t x = 0; x < ids.size(); ++x)
                ids[x] = find(x);
            return Congruence(ids);
        }

      private:
        std::vector<std::uint32_t> _parent;
    };

    struct Closure
    {
        const FiniteLattice& l;
        UnionFind uf;
        std::deque<std::pair<std::uint32_t, std::uint32_t>> pending;

        explicit Closure(const FiniteLattice& lattice) : l(lattice), uf(lattice.size()) {}

        auto merge(std::size_t a, std::size_t b) -> void
        {
            auto x = static_cast<std::uint32_t>(a), y = static_cast<std::uint32_t>(b);
            if (uf.unite(x, y))
                pending.emplace_back(x, y);
        }

        auto run() -> Congruence
        {
            while (! pending.empty()) {
                auto [x, y] = pending.front();
                pending.pop_front();
                for (std::size_t c = 0; c < l.size(); ++c) {
                    merge(l.join(x, c), l.join(y, c));
                    merge(l.meet(x, c), l.meet(y, c));
                }
            }
            return uf.partition();
        }
    };

    auto congruence_label(const FiniteLattice& l, const Congruence& c) -> std::string
    {
        std::string out;
        for (const auto& cls : c.classes()) {
            if (cls.size() < 2)
                continue;
            out += "{";
            for (std::size_t i = 0; i < cls.size(); ++i)
                out += (i ? "," : "") + l.label(cls[i]);
            out += "}";
        }
        return out.empty() ? "{}" : out;
    }
}

Congruence::Congruence(const std::vector<std::uint32_t>& class_of) : _class_of(class_of.size())
{
    std::map<std::uint32_t, std::uint32_t> rep;
    for (std::uint32_t x = 0; x < class_of.size(); ++x) {
        auto [it, inserted] = rep.emplace(class_of[x], x);
        _class_of[x] = it->second;
    }
}

auto Congruence::identity(std::size_t n) -> Congruence
{
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0U);
    return Congruence(ids);
}

auto Congruence::total(std::size_t n) -> Congruence
{
    return Congruence(std::vector<std::uint32_t>(n, 0U));
}

auto Congruence::class_count() const -> std::size_t
{
    std::size_t count = 0;
    for (std::size_t x = 0; x < _class_of.size(); ++x)
        if (_class_of[x] == x)
            ++count;
    return count;
}

auto Congruence::classes() const -> std::vector<std::vector<std::size_t>>
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(_class_of.size(), 0);
    for (std::size_t x = 0; x < _class_of.size(); ++x) {
        if (_class_of[x] == x) {
            slot[x] = out.size();
            out.emplace_back();
        }
        out[slot[_class_of[x]]].push_back(x);
    }
    return out;
}

auto Congruence::refines(const Congruence& other) const -> bool
{
    for (std::size_t x = 0; x < _class_of.size(); ++x)
        if (! other.same(x, _class_of[x]))
            return false;
    return true;
}

auto is_compatible(const FiniteLattice& l, const Congruence& c) -> bool
{
    for (std::size_t a = 0; a < l.size(); ++a) {
        auto b = c.class_of(a);
        if (b == a)
            continue;
        // Checking each element against its class representative suffices:
        // the classes are then closed under the translations by transitivity.
        for (std::size_t x = 0; x < l.size(); ++x)
            if (! c.same(l.join(a, x), l.join(b, x)) || ! c.same(l.meet(a, x), l.meet(b, x)))
                return false;
    }
    return true;
}

auto principal_congruence(const FiniteLattice& l, std::size_t a, std::size_t b) -> Congruence
{
    Closure closure(l);
    closure.merge(a, b);
    return closure.run();
}

auto congruence_join(const FiniteLattice& l, const Congruence& a, const Congruence& b) -> Congruence
{
    Closure closure(l);
    for (std::size_t x = 0; x < l.size(); ++x) {
        closure.merge(x, a.class_of(x));
        closure.merge(x, b.class_of(x));
    }
    return closure.run();
}

auto CongruenceLattice::index_of(const Congruence& c) const -> std::optional<std::size_t>
{
    auto it = std::find(congruences.begin(), congruences.end(), c);
    if (it == congruences.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - congruences.begin());
}

auto congruence_lattice(const FiniteLattice& l, const Limits& limits) -> CongruenceLattice
{
    std::vector<Congruence> generators;
    for (auto [p, lower] : join_irreducibles(l)) {
        auto theta = principal_congruence(l, lower, p);
        if (std::find(generators.begin(), generators.end(), theta) == generators.end())
            generators.push_back(std::move(theta));
    }

    // After the j-th generator, `all` holds the joins of every subset of
    // the first j generators.
    std::vector<Congruence> all{Congruence::identity(l.size())};
    std::map<Congruence, std::size_t> seen{{all.front(), 0}};
    for (const auto& g : generators) {
        const auto snapshot = all.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            auto joined = congruence_join(l, all[i], g);
            if (seen.emplace(joined, all.size()).second) {
                all.push_back(std::move(joined));
                if (all.size() > limits.max_lattice_elements)
                    throw SizeCapError("congruence lattice", all.size(), limits.max_lattice_elements);
            }
        }
    }

    std::sort(all.begin(), all.end(), [](const Congruence& a, const Congruence& b) {
        auto ca = a.class_count(), cb = b.class_count();
        if (ca != cb)
            return ca > cb;
        return a < b;
    });

    const auto n = all.size();
    Relation leq(n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(congruence_label(l, all[i]));
        for (std::size_t j = 0; j < n; ++j)
            if (all[i].refines(all[j]))
                leq.set(i, j);
    }
    auto lattice = lattice_from_poset(Poset(Trusted{}, std::move(labels), std::move(leq)), limits);
    return CongruenceLattice{std::move(lattice), std::move(all)};
}

auto theta_map(const FiniteLattice& l, const DependencyData& d, const CongruenceLattice& con) -> ThetaMap
{
    ThetaMap out;
    auto con_ji = join_irreducibles(con.lattice);
    std::vector<bool> hit(con_ji.size(), false);
    for (auto [p, lower] : d.base) {
        auto theta = principal_congruence(l, lower, p);
        auto idx = con.index_of(theta);
        if (! idx)
            throw InvariantViolation("Theta(" + l.label(p) + ") is missing from the congruence lattice");
        auto it = std::find_if(con_ji.begin(), con_ji.end(), [&](const auto& j) { return j.element == *idx; });
        if (it == con_ji.end())
            throw InvariantViolation("Theta(" + l.label(p) + ") is not join-irreducible in Con L");
        auto pos = static_cast<std::size_t>(it - con_ji.begin());
        hit[pos] = true;
        out.theta.push_back(std::move(theta));
        out.image.push_back(pos);
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw InvariantViolation("Theta does not reach every join-irreducible congruence");

    for (std::size_t i = 0; i < d.base.size(); ++i)
        for (std::size_t j = 0; j < d.base.size(); ++j)
            if (out.theta[i].refines(out.theta[j]) != d.closure.test(i, j))
                throw InvariantViolation("Theta order disagrees with the closed dependency order at " +
                    l.label(d.base[i].element) + "," + l.label(d.base[j].element));
    return out;
}

auto theta_map(const FiniteLattice& l, const Limits& limits) -> ThetaMap
{
    return theta_map(l, join_dependency(l), congruence_lattice(l, limits));
}

auto con_ji_poset_fast(const FiniteLattice& l, const DependencyData& d) -> Poset
{
    return quotient_poset(d.closure_order(l)).poset;
}

auto con_ji_poset_fast(const FiniteLattice& l) -> Poset
{
    return con_ji_poset_fast(l, join_dependency(l));
}

auto je(const DependencyData& d) -> std::size_t
{
    return d.base.size() - d.classes.size();
}

auto je(const FiniteLattice& l) -> std::size_t
{
    return je(join_dependency(l));
}

}

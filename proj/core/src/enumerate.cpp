#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>

#include <algorithm>

namespace lattice_forge {

namespace {
    auto bucket_key(const Relation& r) -> std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool>>
    {
        auto h = heights(r);
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool>> key(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            key[i] = {h[i], r.column(i).count(), r.row(i).count(), r.test(i, i)};
        std::sort(key.begin(), key.end());
        return key;
    }

    auto labels_for(std::size_t n) -> std::vector<std::string>
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(generated_label(i));
        return labels;
    }

    /// Extends a naturally labelled poset on k elements by one element on
    /// top of each down-closed subset, recursively.
    template <typename Emit>
    auto extend(Relation& rel, std::size_t k, std::size_t n, Emit& emit) -> void
    {
        if (k == n) {
            emit(rel);
            return;
        }
        const std::size_t space = std::size_t{1} << k;
        for (std::size_t s = 0; s < space; ++s) {
            bool down_closed = true;
            for (std::size_t x = 0; x < k && down_closed; ++x)
                if (s >> x & 1U)
                    for (std::size_t y = 0; y < k && down_closed; ++y)
                        if (rel.test(y, x) && ! (s >> y & 1U))
                            down_closed = false;
            if (! down_closed)
                continue;
            for (std::size_t y = 0; y < k; ++y)
                rel.set(y, k, s >> y & 1U);
            rel.set(k, k);
            extend(rel, k + 1, n, emit);
        }
        for (std::size_t y = 0; y <= k; ++y)
            rel.set(y, k, false);
    }

    /// Ordered ways of writing n as a sum of m positive parts.
    auto compositions(std::size_t n, std::size_t m) -> std::vector<std::vector<std::size_t>>
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> parts;
        auto rec = [&](auto& self, std::size_t remaining, std::size_t slots) -> void {
            if (slots == 1) {
                parts.push_back(remaining);
                out.push_back(parts);
                parts.pop_back();
                return;
            }
            for (std::size_t first = 1; first + (slots - 1) <= remaining; ++first) {
                parts.push_back(first);
                self(self, remaining - first, slots - 1);
                parts.pop_back();
            }
        };
        if (m >= 1 && n >= m)
            rec(rec, n, m);
        return out;
    }
}

auto IsomorphismClassifier::insert(const Relation& r) -> bool
{
    auto& bucket = _buckets[bucket_key(r)];
    for (const auto& existing : bucket)
        if (relation_isomorphism(existing, r))
            return false;
    bucket.push_back(r);
    ++_count;
    return true;
}

auto enumerate_posets(std::size_t n, const Limits& limits) -> std::vector<Poset>
{
    if (n > limits.max_poset_enumeration)
        throw SizeCapError("poset enumeration", n, limits.max_poset_enumeration);
    std::vector<Poset> out;
    IsomorphismClassifier classes;
    auto labels = labels_for(n);
    Relation rel(n);
    auto emit = [&](const Relation& r) {
        if (classes.insert(r))
            out.emplace_back(Trusted{}, labels, r);
    };
    extend(rel, 0, n, emit);
    return out;
}

auto enumerate_lattices(std::size_t n, const Limits& limits) -> std::vector<FiniteLattice>
{
    if (n > limits.max_lattice_enumeration)
        throw SizeCapError("lattice enumeration", n, limits.max_lattice_enumeration);
    std::vector<FiniteLattice> out;
    if (n == 0)
        return out;
    if (n == 1) {
        out.push_back(lattice_from_poset(Poset(Trusted{}, {"0"}, Relation::identity(1)), limits));
        return out;
    }

    Limits inner_limits = limits;
    inner_limits.max_poset_enumeration = std::max(limits.max_poset_enumeration, n - 2);
    for (const auto& inner : enumerate_posets(n - 2, inner_limits)) {
        // 0 is index 0, 1 is index n-1, inner elements in between.
        Relation rel(n);
        std::vector<std::string> labels{"0"};
        for (std::size_t i = 0; i < n - 2; ++i) {
            labels.push_back(inner.label(i));
            for (std::size_t j = 0; j < n - 2; ++j)
                if (inner.leq(i, j))
                    rel.set(i + 1, j + 1);
        }
        labels.push_back("1");
        for (std::size_t x = 0; x < n; ++x) {
            rel.set(0, x);
            rel.set(x, n - 1);
        }
        try {
            out.push_back(lattice_from_poset(Poset(Trusted{}, std::move(labels), std::move(rel)), limits));
        }
        catch (const NotALatticeError&) {
        }
    }
    return out;
}

auto enumerate_quasi_orders(std::size_t n, const Limits& limits) -> std::vector<QuasiOrder>
{
    if (n > limits.max_poset_enumeration)
        throw SizeCapError("quasi-order enumeration", n, limits.max_poset_enumeration);
    std::vector<QuasiOrder> out;
    auto labels = labels_for(n);
    if (n == 0) {
        out.emplace_back(Trusted{}, labels, Relation(0));
        return out;
    }

    IsomorphismClassifier classes;
    for (std::size_t m = 1; m <= n; ++m) {
        auto posets = enumerate_posets(m, limits);
        for (const auto& parts : compositions(n, m)) {
            std::vector<std::size_t> class_of;
            for (std::size_t c = 0; c < m; ++c)
                class_of.insert(class_of.end(), parts[c], c);
            for (const auto& p : posets) {
                Relation rel(n);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (p.leq(class_of[a], class_of[b]))
                            rel.set(a, b);
                if (classes.insert(rel))
                    out.emplace_back(Trusted{}, labels, std::move(rel));
            }
        }
    }
    return out;
}

auto enumerate_atomistic_closure_systems(std::size_t k, const Limits& limits) -> std::vector<FiniteLattice>
{
    if (k > limits.max_closure_atoms)
        throw SizeCapError("closure-system enumeration", k, limits.max_closure_atoms);
    const std::uint32_t full = k == 0 ? 0U : static_cast<std::uint32_t>((1ULL << k) - 1);
    std::vector<std::uint32_t> fixed{0U}, optional;
    for (std::uint32_t s = 1; s <= full; ++s) {
        auto size = static_cast<std::size_t>(__builtin_popcount(s));
        if (size == 1 || s == full)
            fixed.push_back(s);
        else
            optional.push_back(s);
    }

    std::vector<FiniteLattice> out;
    auto labels = labels_for(k);
    const std::size_t choices = std::size_t{1} << optional.size();
    for (std::size_t pick = 0; pick < choices; ++pick) {
        std::vector<std::uint32_t> family = fixed;
        for (std::size_t i = 0; i < optional.size(); ++i)
            if (pick >> i & 1U)
                family.push_back(optional[i]);
        bool closed = true;
        for (std::size_t a = 0; a < family.size() && closed; ++a)
            for (std::size_t b = a + 1; b < family.size() && closed; ++b)
                closed = std::find(family.begin(), family.end(), family[a] & family[b]) != family.end();
        if (! closed)
            continue;
        out.push_back(closure_system_lattice_from_masks(k, std::move(family), labels, limits));
    }
    return out;
}

auto random_quasi_order(std::mt19937_64& rng, std::size_t max_size) -> QuasiOrder
{
    std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(max_size, 1));
    const auto n = size_dist(rng);
    std::uniform_int_distribution<std::size_t> class_count_dist(1, n);
    const auto m = class_count_dist(rng);
    std::uniform_int_distribution<std::size_t> pick_class(0, m - 1);
    std::vector<std::size_t> class_of(n);
    for (auto& c : class_of)
        c = pick_class(rng);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = unit(rng) * 0.6;
    Relation between(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (unit(rng) < density)
                between.set(a, b);
    between = between.reflexive_transitive_closure();

    Relation rel(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (between.test(class_of[x], class_of[y]))
                rel.set(x, y);
    return QuasiOrder(Trusted{}, labels_for(n), std::move(rel));
}

}

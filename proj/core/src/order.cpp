#include <lattice_forge/error.hpp>
#include <lattice_forge/order.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace lattice_forge {

namespace {
    auto check_distinct(const std::vector<std::string>& labels) -> void
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (! seen.emplace(labels[i], i).second)
                throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + labels[i] + "'");
    }

    auto resolve_pairs(const std::vector<std::string>& labels, const std::vector<LabelPair>& pairs)
        -> std::vector<IndexPair>
    {
        check_distinct(labels);
        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < labels.size(); ++i)
            index.emplace(labels[i], i);

        std::vector<IndexPair> out;
        out.reserve(pairs.size());
        for (const auto& [a, b] : pairs) {
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end())
                throw Error(ErrorCode::UnknownLabel, "unknown label '" + a + "'");
            if (ib == index.end())
                throw Error(ErrorCode::UnknownLabel, "unknown label '" + b + "'");
            out.emplace_back(ia->second, ib->second);
        }
        return out;
    }

    auto generator_relation(std::size_t n, const std::vector<IndexPair>& pairs) -> Relation
    {
        Relation r(n);
        for (auto [a, b] : pairs) {
            if (a >= n || b >= n)
                throw std::out_of_range("pair index out of range");
            r.set(a, b);
        }
        return r;
    }

    /// Shortest path from -> to in the generator graph, inclusive of both ends.
    auto find_path(const Relation& gen, std::size_t from, std::size_t to) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> parent(gen.size(), gen.size());
        std::deque<std::size_t> queue{from};
        parent[from] = from;
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            if (v == to && v != from)
                break;
            bool done = false;
            for_each_member(gen.row(v), [&](std::size_t w) {
                if (done)
                    return;
                if (w == to) {
                    parent[w] = v;
                    done = true;
                }
                else if (parent[w] == gen.size()) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            });
            if (done)
                break;
        }
        std::vector<std::size_t> path{to};
        for (auto v = parent[to]; v != from; v = parent[v])
            path.push_back(v);
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
    }

    auto validate_quasi_order(const std::vector<std::string>& labels, const Relation& rel) -> void
    {
        if (labels.size() != rel.size())
            throw std::invalid_argument("label count does not match relation size");
        check_distinct(labels);
        if (! rel.is_reflexive())
            throw std::invalid_argument("relation is not reflexive");
        if (! rel.is_transitive())
            throw std::invalid_argument("relation is not transitive");
    }
}

QuasiOrder::QuasiOrder(std::vector<std::string> labels, Relation qleq) :
    _labels(std::move(labels)), _rel(std::move(qleq))
{
    validate_quasi_order(_labels, _rel);
}

QuasiOrder::QuasiOrder(Trusted, std::vector<std::string> labels, Relation qleq) :
    _labels(std::move(labels)), _rel(std::move(qleq))
{
}

auto QuasiOrder::index_of(const std::string& label) const -> std::optional<std::size_t>
{
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - _labels.begin());
}

Poset::Poset(std::vector<std::string> labels, Relation leq) : QuasiOrder(std::move(labels), std::move(leq))
{
    if (! _rel.is_antisymmetric())
        throw std::invalid_argument("relation is not antisymmetric");
}

Poset::Poset(Trusted t, std::vector<std::string> labels, Relation leq) :
    QuasiOrder(t, std::move(labels), std::move(leq))
{
}

auto poset_from_index_pairs(std::vector<std::string> labels, const std::vector<IndexPair>& pairs) -> Poset
{
    check_distinct(labels);
    auto gen = generator_relation(labels.size(), pairs);
    auto closed = gen.reflexive_transitive_closure();
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (closed.test(i, j) && closed.test(j, i)) {
                auto there = find_path(gen, i, j);
                auto back = find_path(gen, j, i);
                std::vector<std::string> cycle;
                for (auto v : there)
                    cycle.push_back(labels[v]);
                for (std::size_t k = 1; k < back.size(); ++k)
                    cycle.push_back(labels[back[k]]);
                throw CycleError(std::move(cycle));
            }
    return Poset(Trusted{}, std::move(labels), std::move(closed));
}

auto poset_from_pairs(const std::vector<std::string>& labels, const std::vector<LabelPair>& pairs) -> Poset
{
    return poset_from_index_pairs(labels, resolve_pairs(labels, pairs));
}

auto quasiorder_from_pairs(const std::vector<std::string>& labels, const std::vector<LabelPair>& pairs)
    -> QuasiOrder
{
    auto gen = generator_relation(labels.size(), resolve_pairs(labels, pairs));
    return QuasiOrder(Trusted{}, labels, gen.reflexive_transitive_closure());
}

auto upper_covers(const Poset& p, std::size_t element) -> ElementSet
{
    ElementSet strictly_above = p.up_set(element);
    strictly_above.reset(element);
    ElementSet result = strictly_above;
    for_each_member(strictly_above, [&](std::size_t y) {
        ElementSet above_y = p.up_set(y);
        above_y.reset(y);
        result -= above_y;
    });
    return result;
}

auto lower_covers(const Poset& p, std::size_t element) -> ElementSet
{
    ElementSet result(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.less(x, element) && upper_covers(p, x).test(element))
            result.set(x);
    return result;
}

auto covers(const Poset& p) -> std::vector<IndexPair>
{
    std::vector<IndexPair> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        for_each_member(upper_covers(p, x), [&](std::size_t y) { out.emplace_back(x, y); });
    return out;
}

auto maximal_elements(const Poset& p) -> ElementSet
{
    ElementSet out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.up_set(x).count() == 1)
            out.set(x);
    return out;
}

auto minimal_elements(const Poset& p) -> ElementSet
{
    ElementSet out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.down_set(x).count() == 1)
            out.set(x);
    return out;
}

auto upper_segment(const QuasiOrder& q, std::size_t p) -> ElementSet
{
    return q.relation().row(p);
}

auto heights(const Relation& r) -> std::vector<std::size_t>
{
    // Strictly-below in the quotient sense: y R x and not x R y. That part
    // is acyclic for a transitive R, so a relaxation over n rounds settles.
    const auto n = r.size();
    std::vector<std::size_t> h(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (r.test(y, x) && ! r.test(x, y) && h[x] < h[y] + 1) {
                    h[x] = h[y] + 1;
                    changed = true;
                }
        if (! changed)
            break;
    }
    return h;
}

auto quotient_poset(const QuasiOrder& q) -> Quotient
{
    const auto n = q.size();
    Quotient out;
    out.projection.assign(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        if (out.projection[x] != n)
            continue;
        auto cls_id = out.classes.size();
        out.classes.emplace_back();
        for (std::size_t y = x; y < n; ++y)
            if (q.equivalent(x, y)) {
                out.projection[y] = cls_id;
                out.classes.back().push_back(y);
            }
    }

    const auto m = out.classes.size();
    Relation leq(m);
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
        std::string label;
        for (auto x : out.classes[c])
            label += (label.empty() ? "" : "~") + q.label(x);
        labels.push_back(std::move(label));
        for (std::size_t d = 0; d < m; ++d)
            if (q.leq(out.classes[c].front(), out.classes[d].front()))
                leq.set(c, d);
    }
    out.poset = Poset(Trusted{}, std::move(labels), std::move(leq));
    return out;
}

auto is_isomorphism(const Relation& a, const Relation& b, const std::vector<std::size_t>& f) -> bool
{
    const auto n = a.size();
    if (b.size() != n || f.size() != n)
        return false;
    std::vector<bool> hit(n, false);
    for (auto v : f) {
        if (v >= n || hit[v])
            return false;
        hit[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.test(i, j) != b.test(f[i], f[j]))
                return false;
    return true;
}

namespace {
    using Invariant = std::tuple<std::size_t, std::size_t, std::size_t, bool>;

    auto invariants(const Relation& r) -> std::vector<Invariant>
    {
        auto h = heights(r);
        std::vector<Invariant> out(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            out[i] = {h[i], r.column(i).count(), r.row(i).count(), r.test(i, i)};
        return out;
    }

    struct Search
    {
        const Relation& a;
        const Relation& b;
        std::vector<std::size_t> order;
        std::vector<std::vector<std::size_t>> candidates;
        std::vector<std::size_t> map;
        std::vector<bool> used;

        auto consistent(std::size_t depth, std::size_t x, std::size_t y) const -> bool
        {
            if (a.test(x, x) != b.test(y, y))
                return false;
            for (std::size_t k = 0; k < depth; ++k) {
                auto px = order[k], py = map[px];
                if (a.test(x, px) != b.test(y, py) || a.test(px, x) != b.test(py, y))
                    return false;
            }
            return true;
        }

        auto run(std::size_t depth) -> bool
        {
            if (depth == order.size())
                return true;
            auto x = order[depth];
            for (auto y : candidates[x]) {
                if (used[y] || ! consistent(depth, x, y))
                    continue;
                used[y] = true;
                map[x] = y;
                if (run(depth + 1))
                    return true;
                used[y] = false;
            }
            return false;
        }
    };
}

auto relation_isomorphism(const Relation& a, const Relation& b) -> std::optional<std::vector<std::size_t>>
{
    const auto n = a.size();
    if (b.size() != n || a.pair_count() != b.pair_count())
        return std::nullopt;

    auto inv_a = invariants(a), inv_b = invariants(b);
    std::map<Invariant, std::vector<std::size_t>> by_inv;
    for (std::size_t j = 0; j < n; ++j)
        by_inv[inv_b[j]].push_back(j);

    Search search{a, b, {}, std::vector<std::vector<std::size_t>>(n), std::vector<std::size_t>(n, n),
        std::vector<bool>(n, false)};
    for (std::size_t i = 0; i < n; ++i) {
        auto it = by_inv.find(inv_a[i]);
        if (it == by_inv.end())
            return std::nullopt;
        search.candidates[i] = it->second;
    }
    {
        auto sa = inv_a, sb = inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }

    // Most constrained first; ties by height so that each new element tends
    // to be comparable with ones already placed.
    search.order.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        search.order[i] = i;
    std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t x, std::size_t y) {
        auto cx = search.candidates[x].size(), cy = search.candidates[y].size();
        if (cx != cy)
            return cx < cy;
        return std::get<0>(inv_a[x]) < std::get<0>(inv_a[y]);
    });

    if (! search.run(0))
        return std::nullopt;
    if (! is_isomorphism(a, b, search.map))
        throw InvariantViolation("isomorphism search returned a non-isomorphism");
    return search.map;
}

auto is_isomorphic(const QuasiOrder& a, const QuasiOrder& b) -> std::optional<std::vector<std::size_t>>
{
    return relation_isomorphism(a.relation(), b.relation());
}

auto generated_label(std::size_t i) -> std::string
{
    if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i);
}

auto chain(std::size_t n) -> Poset
{
    std::vector<std::string> labels;
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(generated_label(i));
        if (i)
            pairs.emplace_back(i - 1, i);
    }
    return poset_from_index_pairs(std::move(labels), pairs);
}

auto antichain(std::size_t n) -> Poset
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(generated_label(i));
    return Poset(Trusted{}, std::move(labels), Relation::identity(n));
}

}

#include <lattice_forge/congruence.hpp>
#include <lattice_forge/construct.hpp>
#include <lattice_forge/dependency.hpp>
#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>
#include <lattice_forge/io.hpp>
#include <lattice_forge/spike.hpp>
#include <lattice_forge/verify.hpp>

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace lattice_forge {

namespace {
    using Findings = std::vector<std::string>;

    struct Task
    {
        std::function<Findings()> run;
        std::function<std::string()> instance;
    };

    auto run_tasks(const std::vector<Task>& tasks, std::size_t jobs) -> std::vector<Violation>
    {
        std::vector<Findings> results(tasks.size());
        auto work = [&](std::size_t i) {
            try {
                results[i] = tasks[i].run();
            }
            catch (const std::exception& e) {
                results[i] = {std::string("exception: ") + e.what()};
            }
        };

        jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
        if (jobs == 1)
            for (std::size_t i = 0; i < tasks.size(); ++i)
                work(i);
        else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                        work(i);
                });
            for (auto& th : pool)
                th.join();
        }

        std::vector<Violation> out;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            for (auto& f : results[i])
                out.push_back({std::move(f), tasks[i].instance()});
        return out;
    }

    template <typename T>
    auto json_of(const T& x) -> std::function<std::string()>
    {
        return [&x] { return format_instance(instance_of(x), Format::Json); };
    }

    auto range_text(const char* what, std::size_t lo, std::size_t hi) -> std::string
    {
        return std::string(what) + " with " + std::to_string(lo) + ".." + std::to_string(hi) + " elements";
    }

    auto all_lattices(std::size_t bound, const Limits& limits) -> std::vector<FiniteLattice>
    {
        std::vector<FiniteLattice> out;
        for (std::size_t n = 1; n <= bound; ++n)
            for (auto& l : enumerate_lattices(n, limits))
                out.push_back(std::move(l));
        return out;
    }

    auto all_posets(std::size_t bound, const Limits& limits) -> std::vector<Poset>
    {
        std::vector<Poset> out;
        for (std::size_t n = 0; n <= bound; ++n)
            for (auto& p : enumerate_posets(n, limits))
                out.push_back(std::move(p));
        return out;
    }

    /// Con L is distributive, J(Con L) from the quotient matches J(Con L)
    /// from the full congruence lattice, Theta is onto and order-exact.
    auto check_dcon(const FiniteLattice& l, const Limits& limits) -> Findings
    {
        Findings f;
        auto d = join_dependency(l);
        auto con = congruence_lattice(l, limits);
        if (! is_distributive(con.lattice))
            f.push_back("Con L is not distributive");
        auto brute = join_irreducible_poset(con.lattice);
        auto fast = con_ji_poset_fast(l, d);
        if (! is_isomorphic(fast, brute))
            f.push_back("quotient of the closed dependency order is not isomorphic to J(Con L)");
        theta_map(l, d, con);
        return f;
    }

    auto check_ineq(const FiniteLattice& l, const Limits& limits) -> Findings
    {
        auto con = congruence_lattice(l, limits);
        auto con_ji = join_irreducible_poset(con.lattice);
        auto ji = join_irreducibles(l).size();
        auto alpha = spike_report(con_ji).alpha;
        if (ji < con_ji.size() + alpha)
            return {"|J(L)| = " + std::to_string(ji) + " < |J(Con L)| + alpha = " + std::to_string(con_ji.size()) +
                " + " + std::to_string(alpha)};
        return {};
    }

    auto check_constr(const FiniteLattice& l) -> Findings
    {
        Findings f;
        auto d = join_dependency(l);
        for (std::size_t i = 0; i < d.base.size(); ++i)
            if (d.closure.row(i).count() == 2)
                f.push_back("upper segment of " + l.label(d.base[i].element) + " has two elements");
        return f;
    }

    auto check_descr(const FiniteLattice& l, const Limits& limits) -> Findings
    {
        Findings f;
        auto d = join_dependency(l);
        if (dependency_via_minimal_pairs(l, limits) != d.dependency)
            f.push_back("dependency from minimal pairs differs from the defining quantifier");
        for (const auto& mp : minimal_pairs(l, limits))
            if (mp.cover.size() < 2)
                f.push_back("minimal pair for " + l.label(mp.element) + " has fewer than two elements");
        return f;
    }

    auto check_trutr(const FiniteLattice& l) -> Findings
    {
        return dependency_invariant_violations(l, join_dependency(l));
    }

    auto check_alpha_bound(const Poset& p) -> Findings
    {
        auto alpha = spike_report(p).alpha;
        if (3 * alpha > 2 * p.size())
            return {"alpha = " + std::to_string(alpha) + " exceeds 2/3 of " + std::to_string(p.size())};
        if (p.size() > 0 && alpha >= p.size())
            return {"alpha is not below |P|"};
        return {};
    }

    auto check_spike_free_poset(const Poset& p, const Limits& limits) -> Findings
    {
        auto r = construct_optimal(p, limits);
        bool spike_free = is_spike_free(p);
        bool lower_bounded = is_lower_bounded(r.lattice);
        if (spike_free != lower_bounded)
            return {std::string("spike-free = ") + (spike_free ? "true" : "false") +
                " but optimal realization lower bounded = " + (lower_bounded ? "true" : "false")};
        return {};
    }

    auto check_spike_free_lattice(const FiniteLattice& l) -> Findings
    {
        Findings f;
        auto d = join_dependency(l);
        bool lb = is_lower_bounded(d);
        if (lb != (je(d) == 0))
            f.push_back("lower bounded does not match je(L) = 0");
        if (lb && spike_report(con_ji_poset_fast(l, d)).alpha != 0)
            f.push_back("lower bounded but J(Con L) has spikes");
        return f;
    }

    auto check_roundtrip(const QuasiOrder& q, const Limits& limits) -> Findings
    {
        Findings f;
        const auto n = q.size();
        if (! check_condition_iii(q).holds) {
            try {
                closed_sets_lattice(q, limits);
                f.push_back("quasi-order with a two-element segment was accepted");
            }
            catch (const ConditionViolatedError&) {
            }
            return f;
        }

        // closed_sets_lattice checks atomicity and the order/dependency
        // correspondence itself; re-check here so the sweep stands alone.
        auto r = closed_sets_lattice(q, limits);
        const auto& l = r.lattice;
        if (! is_atomistic(l))
            f.push_back("closed-set lattice is not atomistic");
        auto d = join_dependency(l);
        std::vector<std::size_t> pos(n);
        for (std::size_t p = 0; p < n; ++p) {
            auto at = d.position_of(r.atom_of[p]);
            if (! at) {
                f.push_back("singleton of " + q.label(p) + " is not join-irreducible");
                return f;
            }
            pos[p] = *at;
        }
        if (d.base.size() != n)
            f.push_back("J(L) is larger than the set of atoms");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t x = 0; x < n; ++x) {
                if (d.closure.test(pos[p], pos[x]) != q.leq(p, x))
                    f.push_back("closed dependency order differs at " + q.label(p) + "," + q.label(x));
                if (d.dependency.test(pos[p], pos[x]) != (q.leq(p, x) && p != x))
                    f.push_back("dependency differs at " + q.label(p) + "," + q.label(x));
            }

        std::vector<MinimalPair> expected;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x + 1; y < n; ++y)
                    if (p != x && p != y && q.leq(p, x) && q.leq(p, y)) {
                        std::vector<std::size_t> cover{r.atom_of[x], r.atom_of[y]};
                        std::sort(cover.begin(), cover.end());
                        expected.push_back({r.atom_of[p], cover});
                    }
        std::sort(expected.begin(), expected.end());
        if (minimal_pairs(l, limits) != expected)
            f.push_back("minimal pairs are not exactly <p,{x,y}> with p strictly below distinct x, y");

        // One round of the closure rule gives the least closed superset.
        const std::size_t space = std::size_t{1} << n;
        for (std::size_t s = 0; s < space; ++s) {
            ElementSet x(n, s);
            std::size_t hull = l.bottom();
            for_each_member(x, [&](std::size_t e) { hull = l.join(hull, r.atom_of[e]); });
            ElementSet expected_closure(n, r.closed_sets[hull]);
            if (one_step_closure(q, x) != expected_closure) {
                f.push_back("one-step closure differs from the least closed superset");
                break;
            }
        }
        return f;
    }

    auto check_optjoin(const Poset& p, const Limits& limits) -> Findings
    {
        Findings f;
        auto r = construct_optimal(p, limits);
        auto alpha = spike_report(p).alpha;
        auto ji = join_irreducibles(r.lattice).size();
        if (ji != p.size() + alpha)
            f.push_back("|J(L)| = " + std::to_string(ji) + " but |P| + alpha = " + std::to_string(p.size() + alpha));
        auto con = congruence_lattice(r.lattice, limits);
        auto h = hereditary_lattice(p, limits);
        auto forward = is_isomorphic(con.lattice.order(), h.order());
        if (! forward)
            f.push_back("Con L is not isomorphic to H(P)");
        else {
            std::vector<std::size_t> inverse(forward->size());
            for (std::size_t i = 0; i < forward->size(); ++i)
                inverse[(*forward)[i]] = i;
            if (! is_isomorphism(con.lattice.order().relation(), h.order().relation(), *forward) ||
                ! is_isomorphism(h.order().relation(), con.lattice.order().relation(), inverse))
                f.push_back("isomorphism certificate fails");
        }
        auto con_ji = join_irreducible_poset(con.lattice);
        if (ji != con_ji.size() + spike_report(con_ji).alpha)
            f.push_back("T:Ineq is not tight for the optimal realization");
        return f;
    }

    /// Partition of n given by the class sizes in `sizes`.
    auto check_partition(const std::vector<std::size_t>& sizes, const Limits& limits) -> Findings
    {
        Findings f;
        std::vector<std::string> labels;
        std::vector<std::size_t> class_of;
        for (std::size_t c = 0; c < sizes.size(); ++c)
            for (std::size_t k = 0; k < sizes[c]; ++k) {
                labels.push_back(generated_label(labels.size()));
                class_of.push_back(c);
            }
        bool all_pairs = ! sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s == 2; });
        if (all_pairs) {
            try {
                realize_partition(labels, class_of);
                f.push_back("partition into pairs was accepted");
            }
            catch (const Error& e) {
                if (e.code() != ErrorCode::AllClassesSize2)
                    throw;
            }
            return f;
        }

        auto q = realize_partition(labels, class_of);
        auto r = closed_sets_lattice(q, limits);
        auto d = join_dependency(r.lattice);
        std::vector<std::size_t> pos(labels.size());
        for (std::size_t p = 0; p < labels.size(); ++p)
            pos[p] = *d.position_of(r.atom_of[p]);
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = 0; b < labels.size(); ++b)
                if ((d.class_of[pos[a]] == d.class_of[pos[b]]) != (class_of[a] == class_of[b]))
                    f.push_back("equivalence of the realization differs at " + labels[a] + "," + labels[b]);
        return f;
    }

    auto integer_partitions(std::size_t n) -> std::vector<std::vector<std::size_t>>
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> parts;
        auto rec = [&](auto& self, std::size_t remaining, std::size_t max_part) -> void {
            if (remaining == 0) {
                out.push_back(parts);
                return;
            }
            for (std::size_t k = std::min(remaining, max_part); k >= 1; --k) {
                parts.push_back(k);
                self(self, remaining - k, k);
                parts.pop_back();
            }
        };
        rec(rec, n, n);
        return out;
    }

    auto nosc_poset() -> Poset
    {
        return poset_from_pairs({"p", "q", "q0", "q1"}, {{"p", "q"}, {"q", "q0"}, {"q", "q1"}});
    }

    auto extremal_poset() -> Poset
    {
        return poset_from_pairs({"u", "v", "1"}, {{"u", "1"}, {"v", "1"}});
    }

    auto partition_instance(const std::vector<std::size_t>& sizes) -> std::string
    {
        nlohmann::ordered_json j;
        j["class_sizes"] = sizes;
        return j.dump();
    }

    auto check_bound(const TheoremInfo& info, std::size_t bound) -> void
    {
        if (bound > info.max_bound)
            throw SizeCapError(std::string(info.id) + " sweep", bound, info.max_bound);
    }
}

auto theorem_catalogue() -> const std::vector<TheoremInfo>&
{
    static const std::vector<TheoremInfo> catalogue{
        {"P:Constr", "no upper segment of the closed dependency order has exactly two elements",
            "lattice size", 7, 8},
        {"T:Ineq", "|J(L)| >= |J(Con L)| + alpha(J(Con L))", "lattice size", 7, 8},
        {"T:DCon", "Theta maps J(L) onto J(Con L), order-exactly; quotient path agrees with Con L",
            "lattice size", 7, 8},
        {"L:DescrD", "dependency by definition equals dependency from minimal pairs", "lattice size", 7, 8},
        {"P:trutr", "strict and reflexive closures determine each other; strict self-loops lie on cycles",
            "lattice size", 7, 8},
        {"C:5/3bound", "alpha(P) <= 2|P|/3, with equality for u,v < 1", "poset size", 7, 7},
        {"C:SpFree", "P spike-free iff its optimal realization is lower bounded; lower bounded iff je = 0",
            "poset size (lattices up to bound + 2)", 5, 6},
        {"T:Main-roundtrip",
            "closed subsets of a quasi-order with no two-element segment give back the quasi-order",
            "quasi-order size (plus seeded random samples)", 5, 6},
        {"T:OptJoin", "optimal realization has |P| + alpha(P) join-irreducibles and Con L = H(P)", "poset size",
            5, 6},
        {"T:Part", "the partition realization has the requested equivalence classes", "ground set size", 6, 10},
        {"Ex:nosc",
            "no 4-atom lattice is lower bounded, sectionally complemented and has Con L = H(P) for the "
            "spike-free poset p < q < q0, q < q1",
            "ignored", 4, 4, false},
    };
    return catalogue;
}

auto check_theorem(std::string_view id, const SweepOptions& options) -> TheoremReport
{
    const auto& catalogue = theorem_catalogue();
    auto info = std::find_if(catalogue.begin(), catalogue.end(), [&](const auto& t) { return t.id == id; });
    if (info == catalogue.end())
        throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + std::string(id) + "'");
    if (info->bounded)
        check_bound(*info, options.bound);

    const auto start = std::chrono::steady_clock::now();
    const auto& limits = options.limits;
    const auto bound = options.bound;
    TheoremReport report;
    report.theorem = std::string(id);
    std::vector<Task> tasks;

    // Instances must outlive the tasks that reference them.
    std::vector<FiniteLattice> lattices;
    std::vector<Poset> posets;
    std::vector<QuasiOrder> quasi_orders;
    std::vector<std::vector<std::size_t>> partitions;

    auto lattice_tasks = [&](auto check) {
        lattices = all_lattices(bound, limits);
        report.range = range_text("lattices", 1, bound);
        for (const auto& l : lattices)
            tasks.push_back({[&l, check] { return check(l); }, json_of(l)});
    };

    if (id == "P:Constr")
        lattice_tasks([](const FiniteLattice& l) { return check_constr(l); });
    else if (id == "T:Ineq")
        lattice_tasks([&limits](const FiniteLattice& l) { return check_ineq(l, limits); });
    else if (id == "T:DCon")
        lattice_tasks([&limits](const FiniteLattice& l) { return check_dcon(l, limits); });
    else if (id == "L:DescrD")
        lattice_tasks([&limits](const FiniteLattice& l) { return check_descr(l, limits); });
    else if (id == "P:trutr")
        lattice_tasks([](const FiniteLattice& l) { return check_trutr(l); });
    else if (id == "C:5/3bound") {
        posets = all_posets(bound, limits);
        posets.push_back(extremal_poset());
        report.range = range_text("posets", 0, bound) + ", plus u,v < 1";
        for (const auto& p : posets)
            tasks.push_back({[&p] { return check_alpha_bound(p); }, json_of(p)});
        const auto& extremal = posets.back();
        tasks.push_back({[&extremal] {
                             auto alpha = spike_report(extremal).alpha;
                             if (alpha != 2 || 3 * alpha != 2 * extremal.size())
                                 return Findings{"u,v < 1 does not attain alpha = 2|P|/3"};
                             return Findings{};
                         },
            json_of(extremal)});
    }
    else if (id == "C:SpFree") {
        posets = all_posets(bound, limits);
        lattices = all_lattices(bound + 2, limits);
        report.range = range_text("posets", 0, bound) + "; " + range_text("lattices", 1, bound + 2);
        for (const auto& p : posets)
            tasks.push_back({[&p, &limits] { return check_spike_free_poset(p, limits); }, json_of(p)});
        for (const auto& l : lattices)
            tasks.push_back({[&l] { return check_spike_free_lattice(l); }, json_of(l)});
    }
    else if (id == "T:Main-roundtrip") {
        for (std::size_t n = 0; n <= bound; ++n)
            for (auto& q : enumerate_quasi_orders(n, limits))
                quasi_orders.push_back(std::move(q));
        std::size_t exhaustive = quasi_orders.size();
        std::size_t exhaustive_valid = 0;
        for (const auto& q : quasi_orders)
            exhaustive_valid += check_condition_iii(q).holds ? 1 : 0;

        std::mt19937_64 rng(options.seed);
        std::size_t accepted = 0, drawn = 0;
        while (accepted < options.random_samples) {
            auto q = random_quasi_order(rng, options.random_max_size);
            ++drawn;
            if (! check_condition_iii(q).holds)
                continue;
            quasi_orders.push_back(std::move(q));
            ++accepted;
        }
        report.range = range_text("quasi-orders", 0, bound) + " (up to isomorphism), plus " +
            std::to_string(options.random_samples) + " random ones with 1.." + std::to_string(options.random_max_size) +
            " elements";
        report.notes.push_back(std::to_string(exhaustive) + " quasi-orders enumerated, " +
            std::to_string(exhaustive_valid) + " without a two-element segment");
        report.notes.push_back(std::to_string(accepted) + " random samples kept out of " + std::to_string(drawn) +
            " drawn (seed " + std::to_string(options.seed) + ")");
        for (const auto& q : quasi_orders)
            tasks.push_back({[&q, &limits] { return check_roundtrip(q, limits); }, json_of(q)});
    }
    else if (id == "T:OptJoin") {
        posets = all_posets(bound, limits);
        report.range = range_text("posets", 0, bound);
        for (const auto& p : posets)
            tasks.push_back({[&p, &limits] { return check_optjoin(p, limits); }, json_of(p)});
    }
    else if (id == "T:Part") {
        for (std::size_t n = 0; n <= bound; ++n)
            for (auto& parts : integer_partitions(n))
                partitions.push_back(std::move(parts));
        report.range = "partitions of sets with 0.." + std::to_string(bound) + " elements (up to isomorphism)";
        for (const auto& parts : partitions)
            tasks.push_back({[&parts, &limits] { return check_partition(parts, limits); },
                [&parts] { return partition_instance(parts); }});
    }
    else if (id == "Ex:nosc") {
        lattices = enumerate_atomistic_closure_systems(4, limits);
        posets.push_back(nosc_poset());
        report.range = "atomistic closure systems on 4 atoms";
        const auto h = hereditary_lattice(posets.front(), limits);

        std::atomic<std::size_t> lower_bounded{0}, complemented{0}, both{0};
        for (const auto& l : lattices)
            tasks.push_back({[&l, &h, &limits, &lower_bounded, &complemented, &both] {
                                 bool lb = is_lower_bounded(l);
                                 bool sc = is_sectionally_complemented(l);
                                 lower_bounded += lb;
                                 complemented += sc;
                                 if (! lb || ! sc)
                                     return Findings{};
                                 ++both;
                                 auto con = congruence_lattice(l, limits);
                                 if (is_isomorphic(con.lattice.order(), h.order()))
                                     return Findings{"lower bounded, sectionally complemented, Con L = H(P)"};
                                 return Findings{};
                             },
                json_of(l)});
        const auto& p = posets.front();
        tasks.push_back({[&p, &h, &limits] {
                             Findings f;
                             if (! is_spike_free(p))
                                 f.push_back("the poset is not spike-free");
                             auto r = construct_optimal(p, limits);
                             if (! is_lower_bounded(r.lattice))
                                 f.push_back("optimal realization is not lower bounded");
                             if (! is_atomistic(r.lattice))
                                 f.push_back("optimal realization is not atomistic");
                             auto con = congruence_lattice(r.lattice, limits);
                             if (! is_isomorphic(con.lattice.order(), h.order()))
                                 f.push_back("optimal realization does not have Con L = H(P)");
                             return f;
                         },
            json_of(p)});

        report.instances = tasks.size();
        report.violations = run_tasks(tasks, options.jobs);
        report.notes.push_back(std::to_string(lattices.size()) + " closure systems; " +
            std::to_string(lower_bounded.load()) + " lower bounded; " + std::to_string(complemented.load()) +
            " sectionally complemented; " + std::to_string(both.load()) + " both");
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    report.instances = tasks.size();
    report.violations = run_tasks(tasks, options.jobs);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto report_to_json(const TheoremReport& report) -> std::string
{
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem;
    j["range"] = report.range;
    j["instances"] = report.instances;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        nlohmann::ordered_json entry;
        entry["description"] = v.description;
        entry["instance"] = nlohmann::ordered_json::parse(v.instance);
        j["violations"].push_back(std::move(entry));
    }
    j["notes"] = report.notes;
    j["wall_time_seconds"] = report.wall_seconds;
    j["ok"] = report.ok();
    return j.dump(2) + "\n";
}

}

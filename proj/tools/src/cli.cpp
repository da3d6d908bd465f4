#include <lattice_forge/cli.hpp>

#include <lattice_forge/congruence.hpp>
#include <lattice_forge/construct.hpp>
#include <lattice_forge/dependency.hpp>
#include <lattice_forge/enumerate.hpp>
#include <lattice_forge/error.hpp>
#include <lattice_forge/io.hpp>
#include <lattice_forge/spike.hpp>
#include <lattice_forge/verify.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>

namespace lattice_forge::cli {

namespace {
    using Json = nlohmann::ordered_json;

    struct Common
    {
        std::string format = "json";
        std::string dot_path;
        std::string out_path;
        std::optional<std::size_t> cap;

        auto limits() const -> Limits
        {
            auto l = Limits::from_environment();
            if (cap)
                l.max_lattice_elements = *cap;
            return l;
        }
        auto file_format() const -> Format { return format == "text" ? Format::Text : Format::Json; }
    };

    auto labels_of(const ElementSet& s, const std::vector<std::string>& names) -> Json
    {
        Json j = Json::array();
        for_each_member(s, [&](std::size_t i) { j.push_back(names[i]); });
        return j;
    }

    auto pairs_of(const Relation& r, const std::vector<std::string>& names, bool skip_diagonal) -> Json
    {
        Json j = Json::array();
        for (std::size_t i = 0; i < r.size(); ++i)
            for_each_member(r.row(i), [&](std::size_t k) {
                if (! skip_diagonal || i != k)
                    j.push_back({names[i], names[k]});
            });
        return j;
    }

    auto poset_json(const Poset& p) -> Json
    {
        Json j;
        j["elements"] = p.labels();
        j["covers"] = Json::array();
        for (auto [a, b] : covers(p))
            j["covers"].push_back({p.label(a), p.label(b)});
        return j;
    }

    auto instance_json(const InstanceFile& f) -> Json
    {
        return Json::parse(format_instance(f, Format::Json));
    }

    /// Renders a report: JSON as is, text as one "key: value" line per field.
    auto emit(std::ostream& out, const Json& report, Format format) -> void
    {
        if (format == Format::Json) {
            out << report.dump(2) << "\n";
            return;
        }
        for (const auto& [key, value] : report.items()) {
            out << key << ": ";
            if (value.is_string())
                out << value.get<std::string>();
            else
                out << value.dump();
            out << "\n";
        }
    }

    auto write_file(const std::string& path, const std::string& content) -> void
    {
        std::ofstream f(path, std::ios::binary);
        if (! f)
            throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
        f << content;
    }

    /// Number of down-sets, or nothing when the ground set is too large to scan.
    auto count_down_sets(const Poset& p, const Limits& limits) -> std::optional<std::uint64_t>
    {
        const auto n = p.size();
        if (n > limits.max_ground)
            return std::nullopt;
        std::vector<std::uint32_t> below(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (p.less(k, i))
                    below[i] |= std::uint32_t{1} << k;
        std::uint64_t count = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                if ((m >> i & 1) && (below[i] & ~m) != 0)
                    ok = false;
            count += ok;
        }
        return count;
    }

    auto analyze_poset(const Poset& p, const Limits& limits) -> Json
    {
        auto sr = spike_report(p);
        Json j;
        j["kind"] = "poset";
        j["size"] = p.size();
        j["spikes"] = Json::array();
        for (const auto& s : sr.spikes)
            j["spikes"].push_back({p.label(s.bottom), p.label(s.top)});
        j["boundary"] = labels_of(sr.boundary, p.labels());
        j["unique_boundary"] = labels_of(sr.unique_boundary, p.labels());
        j["multi_boundary"] = labels_of(sr.multi_boundary, p.labels());
        j["alpha"] = sr.alpha;
        j["JE"] = join_excess(p);
        j["spike_free"] = is_spike_free(p);
        if (auto h = count_down_sets(p, limits))
            j["hereditary_lattice_size"] = *h;
        else
            j["hereditary_lattice_size"] = nullptr;
        return j;
    }

    auto analyze_quasi_order(const QuasiOrder& q) -> Json
    {
        auto quotient = quotient_poset(q);
        auto cond = check_condition_iii(q);
        Json j;
        j["kind"] = "quasiorder";
        j["size"] = q.size();
        j["classes"] = Json::array();
        for (const auto& c : quotient.classes) {
            Json members = Json::array();
            for (auto i : c)
                members.push_back(q.label(i));
            j["classes"].push_back(members);
        }
        j["quotient"] = poset_json(quotient.poset);
        j["segment_condition"] = cond.holds;
        if (cond.witness) {
            j["witness"] = q.label(*cond.witness);
            j["witness_segment"] = labels_of(upper_segment(q, *cond.witness), q.labels());
        }
        return j;
    }

    auto analyze_lattice(const FiniteLattice& l, const Limits& limits) -> Json
    {
        auto d = join_dependency(l);
        std::vector<std::string> names;
        for (const auto& p : d.base)
            names.push_back(l.label(p.element));

        Json j;
        j["kind"] = "lattice";
        j["size"] = l.size();
        j["join_irreducibles"] = Json::array();
        for (const auto& p : d.base)
            j["join_irreducibles"].push_back({{"element", l.label(p.element)}, {"lower_cover", l.label(p.lower_cover)}});
        j["dependency"] = pairs_of(d.dependency, names, false);
        j["strict_closure"] = pairs_of(d.strict_closure, names, false);
        j["closure"] = pairs_of(d.closure, names, true);
        j["equivalence_classes"] = Json::array();
        for (const auto& c : d.classes) {
            Json members = Json::array();
            for (auto i : c)
                members.push_back(names[i]);
            j["equivalence_classes"].push_back(members);
        }

        if (d.base.size() <= limits.max_minimal_pair_base) {
            j["minimal_pairs"] = Json::array();
            for (const auto& mp : minimal_pairs(l, limits)) {
                Json cover = Json::array();
                for (auto c : mp.cover)
                    cover.push_back(l.label(c));
                j["minimal_pairs"].push_back({{"element", l.label(mp.element)}, {"cover", cover}});
            }
        }
        else
            j["minimal_pairs"] = nullptr;

        auto con = congruence_lattice(l, limits);
        j["congruence_lattice_size"] = con.lattice.size();
        j["con_join_irreducibles"] = poset_json(con_ji_poset_fast(l, d));
        j["je"] = je(d);
        j["lower_bounded"] = is_lower_bounded(d);
        j["atomistic"] = is_atomistic(l);
        j["sectionally_complemented"] = is_sectionally_complemented(l);
        j["distributive"] = is_distributive(l);
        j["simple"] = con.lattice.size() == 2;
        return j;
    }

    auto certificate(const Poset& from, const Poset& to, const std::optional<std::vector<std::size_t>>& f) -> Json
    {
        if (! f)
            return nullptr;
        std::vector<std::size_t> inverse(f->size());
        for (std::size_t i = 0; i < f->size(); ++i)
            inverse[(*f)[i]] = i;
        Json j;
        j["forward_checked"] = is_isomorphism(from.relation(), to.relation(), *f);
        j["backward_checked"] = is_isomorphism(to.relation(), from.relation(), inverse);
        j["map"] = Json::object();
        for (std::size_t i = 0; i < f->size(); ++i)
            j["map"][from.label(i)] = to.label((*f)[i]);
        return j;
    }

    auto atom_map(const QuasiOrder& q, const Realization& r) -> Json
    {
        Json j = Json::object();
        for (std::size_t p = 0; p < q.size(); ++p)
            j[q.label(p)] = r.lattice.label(r.atom_of[p]);
        return j;
    }

    auto realization_summary(const Realization& r) -> Json
    {
        Json j;
        j["provenance"] = to_string(r.provenance);
        j["lattice_size"] = r.lattice.size();
        j["join_irreducibles"] = join_irreducibles(r.lattice).size();
        j["atomistic"] = is_atomistic(r.lattice);
        j["lower_bounded"] = is_lower_bounded(r.lattice);
        return j;
    }

    /// Equivalence generated by the pairs of an instance, read as a partition.
    auto partition_of(const InstanceFile& f) -> std::pair<std::vector<std::string>, std::vector<std::size_t>>
    {
        auto symmetric = f.relation;
        for (const auto& [a, b] : f.relation)
            symmetric.emplace_back(b, a);
        auto q = quasiorder_from_pairs(f.elements, symmetric);
        auto quotient = quotient_poset(q);
        return {f.elements, quotient.projection};
    }

    auto construct(const std::string& mode, const InstanceFile& input, const Common& common, std::ostream& out) -> int
    {
        const auto limits = common.limits();
        std::optional<Realization> r;
        Json summary;
        summary["mode"] = mode;
        summary["input_size"] = input.elements.size();

        if (mode == "from-quasiorder") {
            auto q = to_quasi_order(input);
            r = closed_sets_lattice(q, limits);
            summary.update(realization_summary(*r));
            summary["atoms"] = atom_map(q, *r);
            summary["dependency_matches_input"] = true;  // closed_sets_lattice checks it
        }
        else if (mode == "optimal") {
            auto p = to_poset(input);
            auto alpha = spike_report(p).alpha;
            auto oq = optimal_q(p);
            r = construct_optimal(p, limits);
            summary.update(realization_summary(*r));
            summary["poset_size"] = p.size();
            summary["alpha"] = alpha;
            summary["poset_size_plus_alpha"] = p.size() + alpha;
            summary["quasi_order"] = instance_json(instance_of(oq.q));
            auto con = congruence_lattice(r->lattice, limits);
            auto h = hereditary_lattice(p, limits);
            auto fast = con_ji_poset_fast(r->lattice);
            summary["congruence_lattice_size"] = con.lattice.size();
            summary["con_ji_to_poset"] = certificate(fast, p, is_isomorphic(fast, p));
            summary["con_to_hereditary"] =
                certificate(con.lattice.order(), h.order(), is_isomorphic(con.lattice.order(), h.order()));
        }
        else {
            auto [labels, class_of] = partition_of(input);
            auto q = realize_partition(labels, class_of);
            r = closed_sets_lattice(q, limits);
            r->provenance = Provenance::Partition;
            summary.update(realization_summary(*r));
            summary["quasi_order"] = instance_json(instance_of(q));
            auto d = join_dependency(r->lattice);
            Json classes = Json::array();
            for (const auto& c : d.classes) {
                Json members = Json::array();
                for (auto i : c)
                    members.push_back(r->lattice.label(d.base[i].element));
                classes.push_back(members);
            }
            summary["realized_classes"] = classes;
            summary["atoms"] = atom_map(q, *r);
        }

        auto lattice_file = instance_of(r->lattice);
        if (! common.out_path.empty()) {
            write_file(common.out_path, format_instance(lattice_file, common.file_format()));
            summary["written_to"] = common.out_path;
        }
        summary["lattice"] = instance_json(lattice_file);
        if (! common.dot_path.empty())
            write_file(common.dot_path, to_dot(r->lattice.order(), "lattice"));
        emit(out, summary, common.file_format());
        return Ok;
    }

    auto analyze(const InstanceFile& input, const Common& common, std::ostream& out) -> int
    {
        const auto limits = common.limits();
        Json report;
        std::optional<Poset> diagram;
        switch (input.kind) {
        case InstanceKind::Poset: {
            auto p = to_poset(input);
            report = analyze_poset(p, limits);
            diagram = p;
            break;
        }
        case InstanceKind::QuasiOrder: {
            auto q = to_quasi_order(input);
            report = analyze_quasi_order(q);
            diagram = quotient_poset(q).poset;
            break;
        }
        case InstanceKind::Lattice: {
            auto l = to_lattice(input, limits);
            report = analyze_lattice(l, limits);
            diagram = l.order();
            break;
        }
        }
        if (! common.dot_path.empty())
            write_file(common.dot_path, to_dot(*diagram));
        emit(out, report, common.file_format());
        return Ok;
    }

    auto verify(const std::string& id, std::optional<std::size_t> max_size, const SweepOptions& base,
        const Common& common, std::ostream& out) -> int
    {
        const auto& catalogue = theorem_catalogue();
        auto info = std::find_if(catalogue.begin(), catalogue.end(), [&](const auto& t) { return t.id == id; });
        if (info == catalogue.end())
            throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + id + "'");
        auto options = base;
        options.bound = max_size.value_or(info->default_bound);
        options.limits = common.limits();
        auto report = check_theorem(id, options);
        if (common.file_format() == Format::Json)
            out << report_to_json(report);
        else {
            out << report.theorem << ": " << (report.ok() ? "ok" : "VIOLATED") << "\n";
            out << "range: " << report.range << "\n";
            out << "instances: " << report.instances << "\n";
            out << "violations: " << report.violations.size() << "\n";
            for (const auto& note : report.notes)
                out << "note: " << note << "\n";
            for (const auto& v : report.violations)
                out << "violation: " << v.description << "\n  " << v.instance << "\n";
        }
        return report.ok() ? Ok : ViolationFound;
    }

    auto enumerate(const std::string& kind, std::size_t n, const Common& common, std::ostream& out) -> int
    {
        const auto limits = common.limits();
        std::vector<InstanceFile> files;
        if (kind == "posets")
            for (const auto& p : enumerate_posets(n, limits))
                files.push_back(instance_of(p));
        else if (kind == "lattices")
            for (const auto& l : enumerate_lattices(n, limits))
                files.push_back(instance_of(l));
        else if (kind == "quasiorders")
            for (const auto& q : enumerate_quasi_orders(n, limits))
                files.push_back(instance_of(q));
        else
            for (const auto& l : enumerate_atomistic_closure_systems(n, limits))
                files.push_back(instance_of(l));

        if (common.file_format() == Format::Json) {
            Json j;
            j["kind"] = kind;
            j["n"] = n;
            j["count"] = files.size();
            j["instances"] = Json::array();
            for (const auto& f : files)
                j["instances"].push_back(instance_json(f));
            out << j.dump(2) << "\n";
        }
        else {
            out << "# " << files.size() << " " << kind << " of size " << n << "\n";
            for (std::size_t i = 0; i < files.size(); ++i)
                out << "\n# instance " << i << "\n" << format_instance(files[i], Format::Text);
        }
        return Ok;
    }

    auto exit_code(ErrorCode code) -> int
    {
        switch (code) {
        case ErrorCode::SizeCapExceeded:
            return ResourceCap;
        case ErrorCode::CycleViolatesAntisymmetry:
        case ErrorCode::NotALattice:
        case ErrorCode::NotIntersectionClosed:
        case ErrorCode::MissingTop:
        case ErrorCode::ConditionIIIViolated:
        case ErrorCode::AllClassesSize2:
            return Semantic;
        case ErrorCode::DuplicateLabel:
        case ErrorCode::UnknownLabel:
        case ErrorCode::UnknownTheoremId:
        case ErrorCode::ParseError:
            return Usage;
        }
        return Usage;
    }

    auto add_common(CLI::App* cmd, Common& common, bool with_out, bool with_dot) -> void
    {
        cmd->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        cmd->add_option("--cap", common.cap, "Largest lattice the run may build (overrides LATTICE_FORGE_CAP)")
            ->check(CLI::PositiveNumber);
        if (with_dot)
            cmd->add_option("--dot", common.dot_path, "Write the Hasse diagram in DOT to this path");
        if (with_out)
            cmd->add_option("--out", common.out_path, "Write the constructed lattice instance to this path");
    }
}

auto run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Join-irreducibles, join dependency and congruence lattices of finite lattices", "lattice-forge"};
    app.require_subcommand(1);
    Common common;

    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report on a poset, quasi-order or lattice instance");
    analyze_cmd->add_option("file", path, "Instance file")->required();
    add_common(analyze_cmd, common, false, true);

    std::string mode;
    auto* construct_cmd = app.add_subcommand("construct", "Build a lattice from a quasi-order, poset or partition");
    construct_cmd->add_option("mode", mode, "from-quasiorder | optimal | from-partition")
        ->required()
        ->check(CLI::IsMember({"from-quasiorder", "optimal", "from-partition"}));
    construct_cmd->add_option("file", path, "Instance file")->required();
    add_common(construct_cmd, common, true, true);

    std::string theorem;
    std::optional<std::size_t> max_size;
    SweepOptions sweep;
    bool list = false;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep a statement over all small instances");
    verify_cmd->add_option("id", theorem, "Statement id (see --list)");
    verify_cmd->add_flag("--list", list, "List the statement ids and bounds");
    verify_cmd->add_option("--max-size", max_size, "Size bound of the sweep");
    verify_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--samples", sweep.random_samples, "Random quasi-orders for T:Main-roundtrip")
        ->capture_default_str();
    verify_cmd->add_option("--seed", sweep.seed, "Seed of the random quasi-orders")->capture_default_str();
    add_common(verify_cmd, common, false, false);

    std::string kind;
    std::size_t n = 0;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Print every instance of a kind and size, up to isomorphism");
    enumerate_cmd->add_option("kind", kind, "posets | lattices | quasiorders | closure-systems")
        ->required()
        ->check(CLI::IsMember({"posets", "lattices", "quasiorders", "closure-systems"}));
    enumerate_cmd->add_option("n", n, "Size (atoms, for closure-systems)")->required();
    add_common(enumerate_cmd, common, false, false);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*analyze_cmd)
            return analyze(read_instance_file(path), common, out);
        if (*construct_cmd)
            return construct(mode, read_instance_file(path), common, out);
        if (*verify_cmd) {
            if (list) {
                for (const auto& t : theorem_catalogue())
                    out << t.id << "  (bound: " << t.bound_meaning << ", default " << t.default_bound << ", max "
                        << t.max_bound << ")\n    " << t.statement << "\n";
                return Ok;
            }
            if (theorem.empty()) {
                err << "verify: a statement id is required (see --list)\n";
                return Usage;
            }
            return verify(theorem, max_size, sweep, common, out);
        }
        return enumerate(kind, n, common, out);
    }
    catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return exit_code(e.code());
    }
    catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return ViolationFound;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
}

}

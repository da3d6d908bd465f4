#include "doctest.h"
#include "fixtures.hpp"

#include <lattice_forge/cli.hpp>
#include <lattice_forge/error.hpp>
#include <lattice_forge/io.hpp>

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lattice_forge;
namespace fs = std::filesystem;

namespace {
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto run_cli(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "lattice-forge");
        std::vector<const char*> argv;
        for (const auto& a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = lattice_forge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    auto scratch() -> fs::path
    {
        auto dir = fs::temp_directory_path() / "lattice_forge_tests";
        fs::create_directories(dir);
        return dir;
    }

    auto write(const std::string& name, const std::string& content) -> std::string
    {
        auto path = scratch() / name;
        std::ofstream(path) << content;
        return path.string();
    }

    auto slurp(const std::string& path) -> std::string
    {
        std::ifstream f(path);
        return {std::istreambuf_iterator<char>(f), {}};
    }

    const char* n5_text = "# N5\nlattice\nelem 0\nelem a\nelem b\nelem c\nelem 1\n"
                          "rel 0 a\nrel a b\nrel b 1\nrel 0 c\nrel c 1\n";
    const char* m3_json = R"({"kind": "lattice", "elements": ["0","a","b","c","1"],
        "relation": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]})";
    const char* uv1_text = "kind poset\nelem u\nelem v\nelem 1\nrel u 1\nrel v 1\n";
}

TEST_CASE("text and JSON parse to the same instance")
{
    auto t = parse_instance(n5_text);
    CHECK(t.kind == InstanceKind::Lattice);
    CHECK(t.elements.size() == 5);
    CHECK(t.relation.size() == 5);
    auto j = parse_instance(format_instance(t, Format::Json));
    CHECK(j.elements == t.elements);
    CHECK(j.relation == t.relation);
    auto again = parse_instance(format_instance(t, Format::Text));
    CHECK(again.relation == t.relation);
    CHECK(parse_instance(m3_json).elements.size() == 5);
}

TEST_CASE("parse errors carry line numbers")
{
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_instance(text);
        }
        catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("poset\nelem a\nrel a b\n") == 3);
    CHECK(line_of("poset\nelem a\nelem a\n") == 3);
    CHECK(line_of("wrong\n") == 1);
    CHECK(line_of("poset\nelem a\nbogus x\n") == 3);
    CHECK(line_of("{\"kind\": \"poset\", \n \"elements\": [1]}") >= 1);
    CHECK(line_of("{\"kind\": \"poset\",\n\n \"elements\": [") == 3);
    CHECK(line_of("") == 1);
}

TEST_CASE("instances round-trip through the file format")
{
    auto l = fixtures::n5();
    auto file = instance_of(l);
    CHECK(file.kind == InstanceKind::Lattice);
    auto back = to_lattice(parse_instance(format_instance(file, Format::Text)));
    CHECK(is_isomorphic(back.order(), l.order()));

    auto q = quasiorder_from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}});
    auto qback = to_quasi_order(parse_instance(format_instance(instance_of(q), Format::Json)));
    CHECK(qback.relation() == q.relation());
}

TEST_CASE("DOT output draws covers only")
{
    auto dot = to_dot(chain(3));
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("n1 -> n2") != std::string::npos);
    CHECK(dot.find("n0 -> n2") == std::string::npos);
}

TEST_CASE("cli analyze")
{
    auto n5 = run_cli({"analyze", write("n5.txt", n5_text)});
    REQUIRE(n5.code == 0);
    auto j = nlohmann::json::parse(n5.out);
    CHECK(j["je"] == 0);
    CHECK(j["lower_bounded"] == true);
    CHECK(j["atomistic"] == false);
    CHECK(j["congruence_lattice_size"] == 5);
    CHECK(j["dependency"] == nlohmann::json::parse(R"([["b","a"],["b","c"]])"));

    auto m3 = nlohmann::json::parse(run_cli({"analyze", write("m3.json", m3_json)}).out);
    CHECK(m3["je"] == 2);
    CHECK(m3["lower_bounded"] == false);
    CHECK(m3["simple"] == true);

    auto dot = (scratch() / "uv1.dot").string();
    auto uv1 = run_cli({"analyze", write("uv1.txt", uv1_text), "--dot", dot});
    REQUIRE(uv1.code == 0);
    auto p = nlohmann::json::parse(uv1.out);
    CHECK(p["alpha"] == 2);
    CHECK(p["JE"] == 2);
    CHECK(p["spike_free"] == false);
    CHECK(p["hereditary_lattice_size"] == 5);
    CHECK(slurp(dot).find("digraph") != std::string::npos);

    auto text = run_cli({"analyze", write("uv1.txt", uv1_text), "--format", "text"});
    CHECK(text.out.find("alpha: 2\n") != std::string::npos);
}

TEST_CASE("report field order is stable")
{
    auto out = run_cli({"analyze", write("n5.txt", n5_text)}).out;
    auto kind = out.find("\"kind\"");
    auto size = out.find("\"size\"");
    auto je = out.find("\"je\"");
    CHECK(kind < size);
    CHECK(size < je);
}

TEST_CASE("cli construct")
{
    auto out_path = (scratch() / "opt.txt").string();
    auto r = run_cli({"construct", "optimal", write("uv1.txt", uv1_text), "--out", out_path});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["join_irreducibles"] == 5);
    CHECK(j["poset_size_plus_alpha"] == 5);
    CHECK(j["con_to_hereditary"]["forward_checked"] == true);
    CHECK(j["con_to_hereditary"]["backward_checked"] == true);
    auto written = to_lattice(read_instance_file(out_path));
    CHECK(atoms(written).count() == 5);
    CHECK(written.size() == j["lattice_size"].get<std::size_t>());

    auto id3 = run_cli({"construct", "from-quasiorder", write("id3.txt", "quasiorder\nelem a\nelem b\nelem c\n")});
    REQUIRE(id3.code == 0);
    auto boolean = to_lattice(parse_instance(nlohmann::json::parse(id3.out)["lattice"].dump()));
    CHECK(is_isomorphic(boolean.order(), fixtures::boolean(3).order()));

    auto chain2 = run_cli({"construct", "from-quasiorder", write("c2.txt", "quasiorder\nelem a\nelem b\nrel a b\n")});
    CHECK(chain2.code == cli::Semantic);
    CHECK(chain2.err.find("ConditionIIIViolated") != std::string::npos);
    CHECK(chain2.err.find("upper segment of a") != std::string::npos);

    auto part = run_cli({"construct", "from-partition", write("p.txt", "quasiorder\nelem a\nelem b\nelem c\nrel b c\n")});
    REQUIRE(part.code == 0);
    CHECK(nlohmann::json::parse(part.out)["realized_classes"].size() == 2);

    auto pairs = run_cli({"construct", "from-partition", write("pp.txt", "quasiorder\nelem a\nelem b\nrel a b\n")});
    CHECK(pairs.code == cli::Semantic);
}

TEST_CASE("cli verify")
{
    auto ok = run_cli({"verify", "P:Constr", "--max-size", "6"});
    CHECK(ok.code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["ok"] == true);
    CHECK(j["violations"].empty());

    auto opt = run_cli({"verify", "T:OptJoin", "--max-size", "5", "--jobs", "2"});
    CHECK(opt.code == 0);

    CHECK(run_cli({"verify", "bogus-id"}).code == cli::Usage);
    CHECK(run_cli({"verify", "P:Constr", "--max-size", "20"}).code == cli::ResourceCap);
    CHECK(run_cli({"verify", "--list"}).out.find("Ex:nosc") != std::string::npos);
}

TEST_CASE("cli enumerate")
{
    auto r = run_cli({"enumerate", "lattices", "5"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["count"] == 5);
    CHECK(run_cli({"enumerate", "posets", "9"}).code == cli::ResourceCap);
    auto text = run_cli({"enumerate", "posets", "2", "--format", "text"});
    CHECK(text.out.find("# instance 1") != std::string::npos);
}

TEST_CASE("cli exit codes")
{
    CHECK(run_cli({}).code == cli::Usage);
    CHECK(run_cli({"analyze"}).code == cli::Usage);
    CHECK(run_cli({"analyze", "/nonexistent/file"}).code == cli::Usage);
    CHECK(run_cli({"analyze", write("bad.txt", "poset\nelem a\nrel a q\n")}).code == cli::Usage);
    CHECK(run_cli({"analyze", write("dup.txt", "poset\nelem a\nelem a\n")}).code == cli::Usage);
    CHECK(run_cli({"analyze", write("cyc.txt", "poset\nelem a\nelem b\nrel a b\nrel b a\n")}).code == cli::Semantic);
    CHECK(run_cli({"analyze", write("nl.txt", "lattice\nelem a\nelem b\n")}).code == cli::Semantic);
    CHECK(run_cli({"analyze", write("n5.txt", n5_text), "--cap", "3"}).code == cli::ResourceCap);
    CHECK(run_cli({"--help"}).code == 0);
}

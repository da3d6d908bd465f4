#include <lattice_forge/error.hpp>
#include <lattice_forge/io.hpp>

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lattice_forge {

namespace {
    using json = nlohmann::ordered_json;

    auto parse_kind(std::string_view word) -> std::optional<InstanceKind>
    {
        if (word == "poset")
            return InstanceKind::Poset;
        if (word == "quasiorder")
            return InstanceKind::QuasiOrder;
        if (word == "lattice")
            return InstanceKind::Lattice;
        return std::nullopt;
    }

    auto line_of_offset(std::string_view text, std::size_t offset) -> std::size_t
    {
        std::size_t line = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        return line;
    }

    auto parse_json(std::string_view text) -> InstanceFile
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error& e) {
            throw ParseError(line_of_offset(text, e.byte), e.what());
        }
        if (! doc.is_object())
            throw ParseError(1, "instance must be a JSON object");
        for (const auto* key : {"kind", "elements", "relation"})
            if (! doc.contains(key))
                throw ParseError(1, std::string("missing key '") + key + "'");

        InstanceFile out;
        if (! doc["kind"].is_string())
            throw ParseError(1, "'kind' must be a string");
        auto kind = parse_kind(doc["kind"].get<std::string>());
        if (! kind)
            throw ParseError(1, "unknown kind '" + doc["kind"].get<std::string>() + "'");
        out.kind = *kind;

        if (! doc["elements"].is_array())
            throw ParseError(1, "'elements' must be an array");
        std::set<std::string> known;
        for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
            const auto& e = doc["elements"][i];
            if (! e.is_string())
                throw ParseError(1, "elements[" + std::to_string(i) + "] is not a string");
            if (! known.insert(e.get<std::string>()).second)
                throw ParseError(1, "elements[" + std::to_string(i) + "]: duplicate label '" + e.get<std::string>() + "'");
            out.elements.push_back(e.get<std::string>());
        }

        if (! doc["relation"].is_array())
            throw ParseError(1, "'relation' must be an array");
        for (std::size_t i = 0; i < doc["relation"].size(); ++i) {
            const auto& r = doc["relation"][i];
            if (! r.is_array() || r.size() != 2 || ! r[0].is_string() || ! r[1].is_string())
                throw ParseError(1, "relation[" + std::to_string(i) + "] is not a pair of labels");
            for (std::size_t k = 0; k < 2; ++k)
                if (! known.count(r[k].get<std::string>()))
                    throw ParseError(1, "relation[" + std::to_string(i) + "]: unknown label '" + r[k].get<std::string>() + "'");
            out.relation.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
        return out;
    }

    auto parse_text(std::string_view text) -> InstanceFile
    {
        InstanceFile out;
        bool have_kind = false;
        std::set<std::string> known;
        std::istringstream in{std::string(text)};
        std::string raw;
        std::size_t line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream words(raw);
            std::vector<std::string> tokens;
            for (std::string w; words >> w;)
                tokens.push_back(w);
            if (tokens.empty())
                continue;

            if (! have_kind) {
                std::string word = tokens[0];
                if (word == "kind") {
                    if (tokens.size() != 2)
                        throw ParseError(line_no, "expected 'kind <poset|quasiorder|lattice>'");
                    word = tokens[1];
                }
                else if (tokens.size() != 1)
                    throw ParseError(line_no, "expected the instance kind");
                auto kind = parse_kind(word);
                if (! kind)
                    throw ParseError(line_no, "unknown kind '" + word + "'");
                out.kind = *kind;
                have_kind = true;
            }
            else if (tokens[0] == "elem") {
                if (tokens.size() != 2)
                    throw ParseError(line_no, "expected 'elem <label>'");
                if (! known.insert(tokens[1]).second)
                    throw ParseError(line_no, "duplicate label '" + tokens[1] + "'");
                out.elements.push_back(tokens[1]);
            }
            else if (tokens[0] == "rel") {
                if (tokens.size() != 3)
                    throw ParseError(line_no, "expected 'rel <label> <label>'");
                for (std::size_t k = 1; k < 3; ++k)
                    if (! known.count(tokens[k]))
                        throw ParseError(line_no, "unknown label '" + tokens[k] + "'");
                out.relation.emplace_back(tokens[1], tokens[2]);
            }
            else
                throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
        if (! have_kind)
            throw ParseError(line_no == 0 ? 1 : line_no, "empty instance: missing kind");
        return out;
    }
}

auto to_string(InstanceKind kind) -> const char*
{
    switch (kind) {
        case InstanceKind::Poset: return "poset";
        case InstanceKind::QuasiOrder: return "quasiorder";
        case InstanceKind::Lattice: return "lattice";
    }
    return "unknown";
}

auto parse_instance(std::string_view text) -> InstanceFile
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_json(text);
    return parse_text(text);
}

auto read_instance_file(const std::filesystem::path& path) -> InstanceFile
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(0, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

auto format_instance(const InstanceFile& instance, Format format) -> std::string
{
    if (format == Format::Json) {
        json doc;
        doc["kind"] = to_string(instance.kind);
        doc["elements"] = instance.elements;
        doc["relation"] = json::array();
        for (const auto& [a, b] : instance.relation)
            doc["relation"].push_back({a, b});
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << to_string(instance.kind) << "\n";
    for (const auto& e : instance.elements)
        out << "elem " << e << "\n";
    for (const auto& [a, b] : instance.relation)
        out << "rel " << a << " " << b << "\n";
    return out.str();
}

auto instance_of(const Poset& p) -> InstanceFile
{
    InstanceFile out{InstanceKind::Poset, p.labels(), {}};
    for (auto [a, b] : covers(p))
        out.relation.emplace_back(p.label(a), p.label(b));
    return out;
}

auto instance_of(const QuasiOrder& q) -> InstanceFile
{
    InstanceFile out{InstanceKind::QuasiOrder, q.labels(), {}};
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            if (a != b && q.leq(a, b))
                out.relation.emplace_back(q.label(a), q.label(b));
    return out;
}

auto instance_of(const FiniteLattice& l) -> InstanceFile
{
    auto out = instance_of(l.order());
    out.kind = InstanceKind::Lattice;
    return out;
}

auto to_poset(const InstanceFile& instance) -> Poset
{
    return poset_from_pairs(instance.elements, instance.relation);
}

auto to_quasi_order(const InstanceFile& instance) -> QuasiOrder
{
    return quasiorder_from_pairs(instance.elements, instance.relation);
}

auto to_lattice(const InstanceFile& instance, const Limits& limits) -> FiniteLattice
{
    return lattice_from_poset(to_poset(instance), limits);
}

namespace {
    auto dot_quote(const std::string& s) -> std::string
    {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    }
}

auto to_dot(const Poset& p, std::string_view graph_name) -> std::string
{
    std::ostringstream out;
    out << "digraph " << dot_quote(std::string(graph_name)) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=" << dot_quote(p.label(i)) << "];\n";
    for (auto [a, b] : covers(p))
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}

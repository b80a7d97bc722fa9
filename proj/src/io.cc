/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <kkernel/io.hh>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace kkernel
{
    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto space = [] (char c) { return c == ' ' || c == '\t' || c == '\r'; };
            while (! s.empty() && space(s.front()))
                s.remove_prefix(1);
            while (! s.empty() && space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        auto split_fields(string_view s) -> vector<string_view>
        {
            vector<string_view> fields;
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                    ++i;
                std::size_t j = i;
                while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                    ++j;
                if (j > i)
                    fields.push_back(s.substr(i, j - i));
                i = j;
            }
            return fields;
        }

        auto parse_int(string_view s, int line) -> int
        {
            int value = 0;
            auto [end, error] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (error != std::errc{} || end != s.data() + s.size() || value < 0)
                throw ParseError{ line, "expected a non-negative integer, got '" + string{ s } + "'" };
            return value;
        }
    }

    auto parse_edge_list(string_view text) -> Digraph
    {
        int line_number = 0, n = -1;
        vector<Arc> arcs;

        while (! text.empty()) {
            auto newline = text.find('\n');
            auto line = trim(text.substr(0, newline));
            text.remove_prefix(newline == string_view::npos ? text.size() : newline + 1);
            ++line_number;

            if (line.empty() || line.front() == '#')
                continue;

            auto fields = split_fields(line);
            if (n < 0) {
                if (fields.size() != 2 || fields[0] != "n")
                    throw ParseError{ line_number, "expected header 'n <count>'" };
                n = parse_int(fields[1], line_number);
                continue;
            }

            if (fields.size() != 2)
                throw ParseError{ line_number, "expected an arc 'u v'" };
            int u = parse_int(fields[0], line_number), v = parse_int(fields[1], line_number);
            if (u == v)
                throw ParseError{ line_number, "loop at vertex " + to_string(u) };
            if (u >= n || v >= n)
                throw ParseError{ line_number, "vertex out of range 0.." + to_string(n - 1) };
            arcs.emplace_back(u, v);
        }

        if (n < 0)
            throw ParseError{ line_number == 0 ? 1 : line_number, "missing header 'n <count>'" };
        return Digraph{ n, arcs };
    }

    auto write_edge_list(const Digraph & d, const vector<string> & labels) -> string
    {
        std::ostringstream out;
        out << "n " << d.size() << '\n';
        for (std::size_t i = 0 ; i < labels.size() ; ++i)
            out << "# " << i << ' ' << labels[i] << '\n';
        for (auto & [u, v] : d.arcs())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto write_dot(const Digraph & d, const vector<string> & labels) -> string
    {
        std::ostringstream out;
        out << "digraph {\n";
        for (std::size_t i = 0 ; i < labels.size() ; ++i)
            out << "  " << i << " [label=\"" << labels[i] << "\"];\n";
        for (auto & [u, v] : d.arcs())
            out << "  " << u << " -> " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto content_digest(string_view bytes) -> string
    {
        std::uint64_t hash = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            hash ^= c;
            hash *= 0x100000001b3ULL;
        }
        char buffer[17];
        std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
        return buffer;
    }

    auto to_json(const KernelCertificate & cert) -> json
    {
        json witnesses = json::object();
        for (auto & [u, w] : cert.witnesses)
            witnesses[to_string(u)] = json{ { "v", w.absorber }, { "d", w.distance } };
        return json{ { "S", cert.members }, { "k", cert.k }, { "l", cert.l }, { "witnesses", witnesses } };
    }

    auto certificate_from_json(const json & j) -> KernelCertificate
    {
        KernelCertificate cert;
        cert.members = j.at("S").get<VertexSet>();
        cert.k = j.at("k").get<int>();
        cert.l = j.at("l").get<int>();
        for (auto & [key, value] : j.at("witnesses").items())
            cert.witnesses.emplace(std::stoi(key), AbsorptionWitness{ value.at("v").get<int>(), value.at("d").get<int>() });
        return cert;
    }

    auto to_json(const CycleReport & report) -> json
    {
        return json{ { "cycle", report.cycle.vertices }, { "len", report.length }, { "sym", report.symmetric },
            { "threshold", report.threshold }, { "margin", report.margin } };
    }

    auto to_json(const PremiseVerdict & verdict) -> json
    {
        return json{ { "holds", verdict.holds }, { "worst", verdict.worst ? to_json(*verdict.worst) : json(nullptr) },
            { "cycles_checked", verdict.cycles_checked } };
    }

    auto to_json(const Violation & v) -> json
    {
        return json{ { "rule", v.rule }, { "witness", v.witness }, { "detail", v.detail } };
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in{ path, std::ios::binary };
        if (! in)
            throw std::runtime_error{ "cannot open " + path };
        std::ostringstream contents;
        contents << in.rdbuf();
        return contents.str();
    }

    auto write_file_atomically(const string & path, string_view contents) -> void
    {
        string temporary = path + ".tmp";
        {
            std::ofstream out{ temporary, std::ios::binary | std::ios::trunc };
            if (! out)
                throw std::runtime_error{ "cannot write " + temporary };
            out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            if (! out)
                throw std::runtime_error{ "short write to " + temporary };
        }
        std::filesystem::rename(temporary, path);
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KKERNEL_GUARD_IO_HH
#define KKERNEL_GUARD_IO_HH 1

#include <kkernel/digraph.hh>
#include <kkernel/kernel.hh>
#include <kkernel/premise.hh>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kkernel
{
    class ParseError : public std::runtime_error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message) :
                std::runtime_error("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }
    };

    /**
     * Edge-list text: a header line "n <count>", then one "u v" arc per line.
     * Blank lines and lines starting with '#' are ignored.
     */
    auto parse_edge_list(std::string_view text) -> Digraph;

    /// Header, optional "# <index> <label>" comments, then arcs in sorted order.
    auto write_edge_list(const Digraph & d, const std::vector<std::string> & labels = {}) -> std::string;

    /// Arcs in sorted order; symmetric pairs appear as two arcs.
    auto write_dot(const Digraph & d, const std::vector<std::string> & labels = {}) -> std::string;

    /// 64-bit FNV-1a over the bytes, as 16 lowercase hex digits.
    auto content_digest(std::string_view bytes) -> std::string;

    auto to_json(const KernelCertificate & cert) -> nlohmann::json;
    auto certificate_from_json(const nlohmann::json & j) -> KernelCertificate;
    auto to_json(const CycleReport & report) -> nlohmann::json;
    auto to_json(const PremiseVerdict & verdict) -> nlohmann::json;
    auto to_json(const Violation & v) -> nlohmann::json;

    auto read_file(const std::string & path) -> std::string;
    /// Writes to a temporary sibling then renames over the target.
    auto write_file_atomically(const std::string & path, std::string_view contents) -> void;
}

#endif

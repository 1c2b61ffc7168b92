#pragma once

// Line-oriented parsing helpers shared by the group and brace readers.
// Internal to the library; not installed.

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "braceforge/errors.hpp"
#include "braceforge/finite_group.hpp"

namespace braceforge::io_detail {

struct LineReader {
    std::istream& in;
    std::string source;
    int lineno = 0;

    // Next non blank line, or nullopt at end of stream.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(source + ":" + std::to_string(lineno) + ": " + what);
    }
};

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline long parse_long(LineReader& r, const std::string& tok) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        r.fail("expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) r.fail("trailing junk in integer '" + tok + "'");
    return v;
}

// Order line: a single integer in [1, 0xFFFF].
inline long read_order(LineReader& r) {
    auto first = r.next();
    if (!first) r.fail("empty input, expected a group order");
    auto head = split_ws(*first);
    if (head.size() != 1) r.fail("first line must hold the order alone");
    const long n = parse_long(r, head[0]);
    if (n < 1 || n > 0xFFFF) r.fail("group order out of range");
    return n;
}

// Reads n rows of n entries, each an index in [0, n).
inline std::vector<Elt> read_rows(LineReader& r, long n, const std::string& what) {
    std::vector<Elt> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (long row = 0; row < n; ++row) {
        auto line = r.next();
        if (!line) r.fail(what + " row " + std::to_string(row) + " missing");
        auto toks = split_ws(*line);
        if (static_cast<long>(toks.size()) != n)
            r.fail(what + " row " + std::to_string(row) + " has " +
                   std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
        for (const auto& t : toks) {
            const long v = parse_long(r, t);
            if (v < 0 || v >= n) r.fail("table index " + t + " out of range");
            table.push_back(static_cast<Elt>(v));
        }
    }
    return table;
}

// Trailing '# <index> <name>' lines, until end of stream.
inline std::vector<std::string> read_labels(LineReader& r, long n) {
    std::vector<std::string> labels;
    while (auto line = r.next()) {
        auto toks = split_ws(*line);
        if (toks[0] != "#") r.fail("unexpected content after the table: '" + *line + "'");
        if (toks.size() < 3) r.fail("label line needs '# <index> <name>'");
        const long idx = parse_long(r, toks[1]);
        if (idx < 0 || idx >= n) r.fail("label index out of range");
        if (labels.empty()) labels.assign(static_cast<std::size_t>(n), "");
        std::string name = toks[2];
        for (std::size_t i = 3; i < toks.size(); ++i) name += " " + toks[i];
        labels[static_cast<std::size_t>(idx)] = name;
    }
    return labels;
}

}  // namespace braceforge::io_detail

#include "braceforge/group_io.hpp"

#include <fstream>

#include "io_detail.hpp"

namespace braceforge {

using io_detail::LineReader;

FiniteGroup read_group(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    const long n = io_detail::read_order(r);
    auto table = io_detail::read_rows(r, n, "table");
    auto labels = io_detail::read_labels(r, n);
    return group_from_table(static_cast<int>(n), std::move(table), std::move(labels));
}

FiniteGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file " + path);
    return read_group(in, path);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
    out << g.n << "\n";
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (b) out << ' ';
            out << g.op(static_cast<Elt>(a), static_cast<Elt>(b));
        }
        out << "\n";
    }
    if (!g.labels.empty())
        for (int a = 0; a < g.n; ++a)
            if (!g.labels[a].empty()) out << "# " << a << ' ' << g.labels[a] << "\n";
}

void write_group_file(const std::string& path, const FiniteGroup& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_group(out, g);
    out.flush();
    if (!out) throw ParseError("failed writing " + path);
}

}  // namespace braceforge

#include <fstream>

#include "braceforge/brace.hpp"
#include "io_detail.hpp"

namespace braceforge {

using io_detail::LineReader;

SkewBrace read_brace(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    const long n = io_detail::read_order(r);
    auto add = io_detail::read_rows(r, n, "additive table");
    auto mul = io_detail::read_rows(r, n, "circle table");
    auto labels = io_detail::read_labels(r, n);
    return make_skew_brace(static_cast<int>(n), std::move(add), std::move(mul),
                           std::move(labels));
}

SkewBrace read_brace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open brace file " + path);
    return read_brace(in, path);
}

namespace {

void write_rows(std::ostream& out, const FiniteGroup& g) {
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (b) out << ' ';
            out << g.op(static_cast<Elt>(a), static_cast<Elt>(b));
        }
        out << "\n";
    }
}

}  // namespace

void write_brace(std::ostream& out, const SkewBrace& b) {
    out << b.size() << "\n";
    write_rows(out, b.add);
    out << "\n";
    write_rows(out, b.mul);
    const auto& labels = b.add.labels;
    if (!labels.empty()) {
        out << "\n";
        for (int a = 0; a < b.size(); ++a)
            if (!labels[a].empty()) out << "# " << a << ' ' << labels[a] << "\n";
    }
}

void write_brace_file(const std::string& path, const SkewBrace& b) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_brace(out, b);
    out.flush();
    if (!out) throw ParseError("failed writing " + path);
}

}  // namespace braceforge

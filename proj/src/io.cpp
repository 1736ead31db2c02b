#include "ldh/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ldh {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
    fail(errc::syntax_error, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        syntax(line, "expected a number, got '" + tok + "'");
    return value;
}

} // namespace

hypergraph parse_hypergraph(std::string_view text, build_options opts) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_n = false;
    int n = 0;
    std::vector<edge_t> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::string word;
        if (!(ls >> word))
            continue; // blank or comment-only line
        if (word == "vertices") {
            if (have_n)
                syntax(line_no, "duplicate vertices line");
            if (!edges.empty())
                syntax(line_no, "vertices line must come before edges");
            std::string tok;
            if (!(ls >> tok))
                syntax(line_no, "vertices line needs a count");
            n = parse_int(tok, line_no);
            std::string extra;
            if (ls >> extra)
                syntax(line_no, "unexpected token '" + extra + "'");
            have_n = true;
        } else if (word == "edge") {
            if (!have_n)
                syntax(line_no, "edge before the vertices line");
            edge_t e;
            std::string tok;
            while (ls >> tok)
                e.push_back(parse_int(tok, line_no));
            if (e.empty())
                syntax(line_no, "edge line needs at least one vertex id");
            edges.push_back(std::move(e));
        } else {
            syntax(line_no, "expected 'vertices' or 'edge', got '" + word + "'");
        }
    }
    if (!have_n)
        syntax(line_no ? line_no : 1, "missing vertices line");
    return hypergraph::build(n, std::move(edges), opts);
}

hypergraph parse_hypergraph_file(const std::string& path, build_options opts) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail(errc::syntax_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_hypergraph(buf.str(), opts);
}

std::string serialize_hypergraph(const hypergraph& h) {
    std::ostringstream out;
    out << "vertices " << h.vertex_count() << "\n";
    for (const auto& e : h.edges()) {
        out << "edge";
        for (int v : e)
            out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

} // namespace ldh

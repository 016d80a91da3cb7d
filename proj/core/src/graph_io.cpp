#include "ecl/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ecl {

Multigraph read_graph_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<EdgeSpec> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (n >= 0) throw ParseError(lineno, "duplicate n line");
            if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "e line before n line");
            int v, w, m;
            if (!(ls >> v >> w >> m)) throw ParseError(lineno, "bad e line");
            if (v < 0 || v >= n || w < 0 || w >= n)
                throw ParseError(lineno, "vertex out of range");
            if (v == w) throw ParseError(lineno, "loop rejected");
            if (m < 1) throw ParseError(lineno, "multiplicity must be >= 1");
            edges.push_back({v, w, m});
        } else {
            throw ParseError(lineno, "unknown tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing n line");
    return Multigraph(n, edges);
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::string s;
        if (!(in >> s)) throw std::runtime_error("empty graph6 file " + path);
        return from_graph6(s);
    }
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const Multigraph& g) {
    out << "n " << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v)
        for (int w = v + 1; w < g.n(); ++w)
            if (g.mult(v, w) > 0)
                out << "e " << v << " " << w << " " << g.mult(v, w) << "\n";
}

Multigraph from_graph6(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty graph6 string");
    std::size_t pos = 0;
    if (s[0] == '>') {  // optional ">>graph6<<" header
        if (s.rfind(">>graph6<<", 0) != 0)
            throw std::runtime_error("bad graph6 header");
        pos = 10;
    }
    if (pos >= s.size()) throw std::runtime_error("truncated graph6 string");
    int n;
    if (s[pos] == '~') throw std::runtime_error("graph6 n > 62 unsupported");
    n = s[pos] - 63;
    if (n < 0 || n > 62) throw std::runtime_error("bad graph6 size byte");
    ++pos;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size() - pos) < nbytes)
        throw std::runtime_error("truncated graph6 string");
    std::vector<EdgeSpec> edges;
    int bit = 0;
    for (int w = 1; w < n; ++w)
        for (int v = 0; v < w; ++v) {
            int byte = s[pos + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw std::runtime_error("bad graph6 byte");
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({v, w, 1});
            ++bit;
        }
    return Multigraph(n, edges);
}

std::string to_graph6(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("graph6 requires a simple graph");
    if (g.n() > 62) throw std::invalid_argument("graph6 n > 62 unsupported");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int nbits = g.n() * (g.n() - 1) / 2;
    std::vector<int> bytes((nbits + 5) / 6, 0);
    int bit = 0;
    for (int w = 1; w < g.n(); ++w)
        for (int v = 0; v < w; ++v) {
            if (g.mult(v, w) > 0) bytes[bit / 6] |= 1 << (5 - bit % 6);
            ++bit;
        }
    for (int b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

}  // namespace ecl

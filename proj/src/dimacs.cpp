#include "csep/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace csep {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long m = -1;
    long seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw InputError("dimacs: bad problem line: " + line);
            g = Graph(n);
        } else if (tag == 'e') {
            if (n < 0) throw InputError("dimacs: edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw InputError("dimacs: bad edge line: " + line);
            if (u < 1 || v < 1 || u > n || v > n || u == v)
                throw InputError("dimacs: edge ids out of range: " + line);
            if (g.adjacent(u - 1, v - 1)) throw InputError("dimacs: duplicate edge: " + line);
            g.add_edge(u - 1, v - 1);
            ++seen;
        } else {
            throw InputError("dimacs: unrecognized line: " + line);
        }
    }
    if (n < 0) throw InputError("dimacs: missing problem line");
    if (seen != m) throw InputError("dimacs: edge count mismatch");
    return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path);
    write_dimacs(out, g);
}

}  // namespace csep

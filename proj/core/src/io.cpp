#include "commvul/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace commvul {

namespace {

bool parse_int(const std::string& tok, int& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
        line.erase(hash);
    return line;
}

} // namespace

LoadedGraph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue;
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("expected two node labels", lineno);
        int u = 0, v = 0;
        if (!parse_int(a, u) || !parse_int(b, v))
            throw ParseError("node labels must be integers: '" + a + " " + b + "'", lineno);
        edges.emplace_back(u, v);
    }
    if (edges.empty())
        throw DomainError("edge list holds no edges");
    Graph::LoadStats stats;
    Graph g = Graph::from_edges(edges, &stats);
    return LoadedGraph{std::move(g), stats};
}

LoadedGraph load_adjacency_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        bool blank = line.find_first_not_of(" \t\r,") == std::string::npos;
        if (blank)
            continue;
        std::vector<int> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            cell.erase(cell.find_last_not_of(" \t\r") + 1);
            int v = 0;
            if (!parse_int(cell, v) || (v != 0 && v != 1))
                throw ParseError("adjacency entries must be 0 or 1, got '" + cell + "'",
                                 lineno);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0)
        throw ParseError("adjacency matrix is empty");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != n)
            throw ParseError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " of " + std::to_string(n) +
                             " entries");
    for (int i = 0; i < n; ++i) {
        if (rows[i][i] != 0)
            throw ParseError("nonzero diagonal at (" + std::to_string(i + 1) + ", " +
                             std::to_string(i + 1) + ")");
        for (int j = 0; j < i; ++j)
            if (rows[i][j] != rows[j][i])
                throw ParseError("asymmetric entry at (" + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) + ")");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rows[i][j])
                edges.emplace_back(i + 1, j + 1);
    if (edges.empty())
        throw DomainError("adjacency matrix holds no edges");
    LoadedGraph out{Graph::from_edges(edges, nullptr), {}};
    return out;
}

std::string serialize_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

LoadedGraph load_graph_file(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    bool adjacency = format == "adjacency" ||
                     (format == "auto" && path.size() > 4 &&
                      path.compare(path.size() - 4, 4, ".csv") == 0);
    return adjacency ? load_adjacency_csv(text) : load_edge_list(text);
}

} // namespace commvul

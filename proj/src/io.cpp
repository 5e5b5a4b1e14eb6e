#include "tga/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {

namespace {

struct LineReader {
    std::ifstream in;
    std::string path;
    int line_no = 0;

    LineReader(const std::string& p) : in(p), path(p) {
        if (!in) {
            throw ParseError(p, 0, "cannot open file");
        }
    }

    // Next non-empty line, split into integer tokens.
    std::vector<long long> next_ints(const char* what) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            std::vector<long long> out;
            std::string tok;
            while (ss >> tok) {
                try {
                    size_t used = 0;
                    out.push_back(std::stoll(tok, &used));
                    if (used != tok.size()) {
                        throw std::invalid_argument("");
                    }
                } catch (const std::exception&) {
                    throw ParseError(path, line_no, std::string("expected integer, got \"") +
                                                        tok + "\" while reading " + what);
                }
            }
            if (!out.empty()) {
                return out;
            }
        }
        throw ParseError(path, line_no, std::string("unexpected end of file while reading ") +
                                            what);
    }
};

std::vector<std::vector<int>> read_adjacency(LineReader& reader, int rows, long long max_degree,
                                             const std::vector<long long>& degrees,
                                             int other_side, const char* what) {
    std::vector<std::vector<int>> adj(rows);
    for (int i = 0; i < rows; ++i) {
        auto entries = reader.next_ints(what);
        if (static_cast<long long>(entries.size()) != degrees[i] &&
            static_cast<long long>(entries.size()) != max_degree) {
            throw ParseError(reader.path, reader.line_no,
                             std::string(what) + " " + std::to_string(i) + " lists " +
                                 std::to_string(entries.size()) + " entries, expected " +
                                 std::to_string(degrees[i]) + " (or padded to " +
                                 std::to_string(max_degree) + ")");
        }
        for (long long e : entries) {
            if (e == 0) {
                continue;  // padding
            }
            if (e < 1 || e > other_side) {
                throw ParseError(reader.path, reader.line_no,
                                 "neighbor index " + std::to_string(e) + " out of range [1, " +
                                     std::to_string(other_side) + "]");
            }
            adj[i].push_back(static_cast<int>(e - 1));
        }
        if (static_cast<long long>(adj[i].size()) != degrees[i]) {
            throw ParseError(reader.path, reader.line_no,
                             std::string(what) + " " + std::to_string(i) + " has " +
                                 std::to_string(adj[i].size()) + " nonzero entries, degree list says " +
                                 std::to_string(degrees[i]));
        }
    }
    return adj;
}

}  // namespace

TannerGraph load_alist(const std::string& path) {
    LineReader reader(path);
    auto header = reader.next_ints("the size header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
        throw ParseError(path, reader.line_no, "expected \"n m\"");
    }
    const int n = static_cast<int>(header[0]);
    const int m = static_cast<int>(header[1]);

    auto max_line = reader.next_ints("the max-degree header");
    if (max_line.size() != 2) {
        throw ParseError(path, reader.line_no, "expected \"max_col_degree max_row_degree\"");
    }

    auto col_degrees = reader.next_ints("the column degree list");
    if (static_cast<int>(col_degrees.size()) != n) {
        throw ParseError(path, reader.line_no,
                         "column degree list has " + std::to_string(col_degrees.size()) +
                             " entries, expected " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
        if (col_degrees[v] < 0 || col_degrees[v] > max_line[0]) {
            throw ParseError(path, reader.line_no,
                             "column degree " + std::to_string(col_degrees[v]) +
                                 " exceeds declared maximum " + std::to_string(max_line[0]));
        }
    }
    auto row_degrees = reader.next_ints("the row degree list");
    if (static_cast<int>(row_degrees.size()) != m) {
        throw ParseError(path, reader.line_no,
                         "row degree list has " + std::to_string(row_degrees.size()) +
                             " entries, expected " + std::to_string(m));
    }
    for (int c = 0; c < m; ++c) {
        if (row_degrees[c] < 0 || row_degrees[c] > max_line[1]) {
            throw ParseError(path, reader.line_no,
                             "row degree " + std::to_string(row_degrees[c]) +
                                 " exceeds declared maximum " + std::to_string(max_line[1]));
        }
    }

    auto var_adj = read_adjacency(reader, n, max_line[0], col_degrees, m, "variable");
    auto check_adj = read_adjacency(reader, m, max_line[1], row_degrees, n, "check");
    try {
        return TannerGraph::from_adjacency(std::move(var_adj), std::move(check_adj));
    } catch (const std::exception& e) {
        throw ParseError(path, reader.line_no, e.what());
    }
}

void save_alist(const TannerGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    const int max_col = g.max_var_degree();
    const int max_row = g.max_check_degree();
    out << g.var_count() << " " << g.check_count() << "\n";
    out << max_col << " " << max_row << "\n";
    for (int v = 0; v < g.var_count(); ++v) {
        out << g.var_degree(v) << (v + 1 < g.var_count() ? " " : "\n");
    }
    for (int c = 0; c < g.check_count(); ++c) {
        out << g.check_degree(c) << (c + 1 < g.check_count() ? " " : "\n");
    }
    for (int v = 0; v < g.var_count(); ++v) {
        for (int i = 0; i < max_col; ++i) {
            out << (i < g.var_degree(v) ? g.var_neighbors(v)[i] + 1 : 0)
                << (i + 1 < max_col ? " " : "\n");
        }
    }
    for (int c = 0; c < g.check_count(); ++c) {
        for (int i = 0; i < max_row; ++i) {
            out << (i < g.check_degree(c) ? g.check_neighbors(c)[i] + 1 : 0)
                << (i + 1 < max_row ? " " : "\n");
        }
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

GeneralGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    std::vector<std::pair<int, int>> edges;
    int declared_nodes = -1;
    int max_index = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) {
            continue;
        }
        if (first == "nodes") {
            if (!(ss >> declared_nodes) || declared_nodes < 0) {
                throw ParseError(path, line_no, "expected \"nodes N\"");
            }
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError(path, line_no, "expected integer node index, got \"" + first + "\"");
        }
        if (!(ss >> v)) {
            throw ParseError(path, line_no, "expected \"u v\"");
        }
        if (u < 0 || v < 0) {
            throw ParseError(path, line_no, "negative node index");
        }
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    int nodes = std::max(declared_nodes, max_index + 1);
    GeneralGraph g(nodes);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

void save_edge_list(const GeneralGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << "nodes " << g.node_count() << "\n";
    for (auto [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

SubCode load_subcode(const std::string& path) {
    LineReader reader(path);
    auto header = reader.next_ints("the sub-code header");
    if (header.size() != 2 || header[0] < 1 || header[0] > 16 || header[1] < 0) {
        throw ParseError(path, reader.line_no, "expected \"rho k\" with 1 <= rho <= 16");
    }
    const int rho = static_cast<int>(header[0]);
    const int k = static_cast<int>(header[1]);
    std::vector<std::uint32_t> rows;
    std::string line;
    while (static_cast<int>(rows.size()) < k && std::getline(reader.in, line)) {
        ++reader.line_no;
        std::string trimmed;
        for (char ch : line) {
            if (!isspace(static_cast<unsigned char>(ch))) {
                trimmed += ch;
            }
        }
        if (trimmed.empty()) {
            continue;
        }
        if (static_cast<int>(trimmed.size()) != rho) {
            throw ParseError(path, reader.line_no,
                             "generator row has " + std::to_string(trimmed.size()) +
                                 " symbols, expected " + std::to_string(rho));
        }
        std::uint32_t row = 0;
        for (int j = 0; j < rho; ++j) {
            if (trimmed[j] != '0' && trimmed[j] != '1') {
                throw ParseError(path, reader.line_no,
                                 std::string("generator rows are 0/1 strings, got '") +
                                     trimmed[j] + "'");
            }
            row |= static_cast<std::uint32_t>(trimmed[j] - '0') << j;
        }
        rows.push_back(row);
    }
    if (static_cast<int>(rows.size()) != k) {
        throw ParseError(path, reader.line_no,
                         "expected " + std::to_string(k) + " generator rows, found " +
                             std::to_string(rows.size()));
    }
    return SubCode::from_generators(rho, rows);
}

void save_subcode(const SubCode& s, const std::string& path) {
    // Extract a basis from the codeword list: xor-echelon keyed by top bit.
    std::vector<std::uint32_t> basis;
    std::uint32_t echelon[17] = {0};
    for (auto w : s.codewords()) {
        std::uint32_t r = w;
        for (int j = 16; j >= 0 && r; --j) {
            if (!(r >> j & 1)) {
                continue;
            }
            if (echelon[j]) {
                r ^= echelon[j];
            } else {
                echelon[j] = r;
                basis.push_back(w);
                r = 0;
            }
        }
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << s.block_length() << " " << basis.size() << "\n";
    for (auto w : basis) {
        for (int j = 0; j < s.block_length(); ++j) {
            out << ((w >> j) & 1);
        }
        out << "\n";
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

NodeSet load_node_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    NodeSet out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        long long v;
        while (ss >> v) {
            if (v < 0) {
                throw ParseError(path, line_no, "negative variable index");
            }
            out.push_back(static_cast<int>(v));
        }
    }
    return make_node_set(std::move(out));
}

void save_node_set(const NodeSet& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    for (int v : s) {
        out << v << "\n";
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path);
    }
}

}  // namespace tga

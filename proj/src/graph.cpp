#include "subdivlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subdiv {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
}

}  // namespace

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

long long SimpleGraph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += static_cast<long long>(nb.size());
    return deg_sum / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u, n_, "add_edge");
    check_vertex(v, n_, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u, n_, "remove_edge");
    check_vertex(v, n_, "remove_edge");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it == adj_[u].end() || *it != v)
        throw std::invalid_argument("remove_edge: no edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    adj_[u].erase(it);
    auto jt = std::lower_bound(adj_[v].begin(), adj_[v].end(), u);
    adj_[v].erase(jt);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(n_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i], n_, "induced");
        if (index[vertices[i]] != -1) throw std::invalid_argument("induced: repeated vertex");
        index[vertices[i]] = static_cast<int>(i);
    }
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (int u : vertices)
        for (int v : adj_[u])
            if (index[v] != -1 && index[u] < index[v]) g.add_edge(index[u], index[v]);
    return g;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    SimpleGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) g.add_edge(perm[u], perm[v]);
    return g;
}

MultiGraph MultiGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void MultiGraph::add_edge(int u, int v, int mult) {
    check_vertex(u, n_, "MultiGraph::add_edge");
    check_vertex(v, n_, "MultiGraph::add_edge");
    if (u == v) throw std::invalid_argument("MultiGraph::add_edge: loop forbidden");
    if (mult < 1) throw std::invalid_argument("MultiGraph::add_edge: multiplicity < 1");
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::make_pair(e.u, e.v) < key;
                               });
    if (it != edges_.end() && it->u == u && it->v == v)
        it->multiplicity += mult;
    else
        edges_.insert(it, Edge{u, v, mult});
}

long long MultiGraph::total_multiplicity() const {
    long long total = 0;
    for (const auto& e : edges_) total += e.multiplicity;
    return total;
}

bool MultiGraph::is_simple() const {
    for (const auto& e : edges_)
        if (e.multiplicity > 1) return false;
    return true;
}

MultiGraph MultiGraph::complete(int t) {
    MultiGraph g(t);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

MultiGraph MultiGraph::parallel_edges(int multiplicity) {
    MultiGraph g(2);
    g.add_edge(0, 1, multiplicity);
    return g;
}

mpq_class DegreeProfile::ratio() const {
    if (min_degree <= 0) throw std::logic_error("DegreeProfile::ratio: min degree is 0");
    mpq_class r(max_degree, min_degree);
    r.canonicalize();
    return r;
}

DegreeProfile degree_profile(const SimpleGraph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("degree_profile: empty graph");
    DegreeProfile p{g.degree(0), g.degree(0)};
    for (int v = 1; v < g.vertex_count(); ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
    }
    return p;
}

bool verify_almost_regular(const SimpleGraph& g, const mpq_class& K) {
    DegreeProfile p = degree_profile(g);
    if (p.min_degree == 0) return false;
    return mpq_class(p.max_degree) <= K * mpq_class(p.min_degree);
}

namespace {

struct ParsedLine {
    int u = 0, v = 0;
    long long mult = 1;
    int fields = 0;
};

bool parse_edge_line(const std::string& line, int lineno, ParsedLine& out) {
    std::string body = line;
    if (!body.empty() && body[0] == '#') return false;
    std::istringstream ss(body);
    long long a, b, m;
    if (!(ss >> a)) return false;  // blank line
    if (!(ss >> b))
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": expected two vertex ids");
    out.fields = 2;
    if (ss >> m) {
        out.mult = m;
        out.fields = 3;
    }
    std::string trailing;
    if (ss >> trailing)
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": trailing content '" + trailing + "'");
    if (a < 0 || b < 0)
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": negative vertex id");
    out.u = static_cast<int>(a);
    out.v = static_cast<int>(b);
    return true;
}

template <typename AddEdge>
int read_edge_lines(std::istream& in, bool allow_mult, AddEdge&& add) {
    std::string line;
    int lineno = 0;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        ParsedLine p;
        if (!parse_edge_line(line, lineno, p)) continue;
        if (!allow_mult && p.fields == 3)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": multiplicity column not allowed for simple graphs");
        if (p.mult < 1 || p.mult > 1000000)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": bad multiplicity");
        max_id = std::max({max_id, p.u, p.v});
        add(p.u, p.v, static_cast<int>(p.mult));
    }
    return max_id + 1;
}

}  // namespace

SimpleGraph read_simple_graph(std::istream& in, int n_hint) {
    std::vector<std::pair<int, int>> edges;
    int n = read_edge_lines(in, false, [&](int u, int v, int) { edges.emplace_back(u, v); });
    return SimpleGraph::from_edges(std::max(n, n_hint), edges);
}

SimpleGraph read_simple_graph_file(const std::string& path, int n_hint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_simple_graph(in, n_hint);
}

MultiGraph read_multigraph(std::istream& in, int n_hint) {
    std::vector<std::tuple<int, int, int>> edges;
    int n = read_edge_lines(in, true, [&](int u, int v, int m) { edges.emplace_back(u, v, m); });
    MultiGraph g(std::max(n, n_hint));
    for (auto [u, v, m] : edges) g.add_edge(u, v, m);
    return g;
}

MultiGraph read_multigraph_file(const std::string& path, int n_hint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_multigraph(in, n_hint);
}

void write_simple_graph(std::ostream& out, const SimpleGraph& g) {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_simple_graph_file(const std::string& path, const SimpleGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_simple_graph(out, g);
}

void write_multigraph(std::ostream& out, const MultiGraph& g) {
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (e.multiplicity != 1) out << ' ' << e.multiplicity;
        out << '\n';
    }
}

}  // namespace subdiv

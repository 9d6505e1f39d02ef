#include "signet/graph.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "signet/error.hpp"

namespace signet {

SignedGraph::SignedGraph(Index n, SpMat adj) : n_(n), adj_(std::move(adj)) {
    d_abs_ = Vector::Zero(n_);
    d_pos_ = Vector::Zero(n_);
    d_neg_ = Vector::Zero(n_);
    for (int col = 0; col < adj_.outerSize(); ++col) {
        for (SpMat::InnerIterator it(adj_, col); it; ++it) {
            const double w = it.value();
            d_abs_[it.row()] += std::abs(w);
            if (w > 0)
                d_pos_[it.row()] += w;
            else
                d_neg_[it.row()] -= w;
        }
    }
}

SignedGraph SignedGraph::from_edges(Index n, const std::vector<EdgeTriple>& triples) {
    if (n < 0) throw Error(Errc::invalid_params, "negative vertex count");
    // accumulate on canonical (min,max) keys so repeated pairs sum
    std::map<std::pair<Index, Index>, double> acc;
    for (const auto& t : triples) {
        if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n)
            throw Error(Errc::index_out_of_range,
                        "edge (" + std::to_string(t.i) + "," + std::to_string(t.j) +
                            ") outside [0," + std::to_string(n) + ")");
        if (t.i == t.j)
            throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(t.i));
        if (!std::isfinite(t.weight))
            throw Error(Errc::non_finite_weight,
                        "edge (" + std::to_string(t.i) + "," + std::to_string(t.j) + ")");
        acc[{std::min(t.i, t.j), std::max(t.i, t.j)}] += t.weight;
    }
    std::vector<Triplet> trips;
    trips.reserve(2 * acc.size());
    for (const auto& [key, w] : acc) {
        if (w == 0.0) continue; // exact zero after summation: structurally absent
        trips.emplace_back(key.first, key.second, w);
        trips.emplace_back(key.second, key.first, w);
    }
    SpMat adj(n, n);
    adj.setFromTriplets(trips.begin(), trips.end());
    adj.makeCompressed();
    return SignedGraph(n, std::move(adj));
}

SpMat SignedGraph::positive_part() const {
    SpMat pos = adj_.unaryExpr([](double w) { return w > 0 ? w : 0.0; });
    pos.prune(0.0);
    return pos;
}

SpMat SignedGraph::negative_part() const {
    SpMat neg = adj_.unaryExpr([](double w) { return w < 0 ? -w : 0.0; });
    neg.prune(0.0);
    return neg;
}

double SignedGraph::positive_weight() const { return d_pos_.sum() / 2.0; }
double SignedGraph::negative_weight() const { return d_neg_.sum() / 2.0; }

namespace {

Vector inv_sqrt_or_zero(const Vector& d, ZeroDegreePolicy policy, const char* what) {
    Vector s(d.size());
    for (Index i = 0; i < d.size(); ++i) {
        if (d[i] > 0) {
            s[i] = 1.0 / std::sqrt(d[i]);
        } else if (policy == ZeroDegreePolicy::Reject) {
            throw Error(Errc::zero_degree_vertex,
                        std::string(what) + " zero at vertex " + std::to_string(i));
        } else {
            s[i] = 0.0;
        }
    }
    return s;
}

SpMat scaled_both_sides(const SpMat& m, const Vector& s) {
    return s.asDiagonal() * m * s.asDiagonal();
}

SpMat diag_minus(const Vector& d, const SpMat& a) {
    SpMat lap(a.rows(), a.cols());
    lap = -a;
    SpMat dd(a.rows(), a.cols());
    std::vector<Triplet> trips;
    for (Index i = 0; i < d.size(); ++i)
        if (d[i] != 0.0) trips.emplace_back(i, i, d[i]);
    dd.setFromTriplets(trips.begin(), trips.end());
    lap += dd;
    lap.makeCompressed();
    return lap;
}

} // namespace

SpMat laplacian(const SignedGraph& g, LaplacianKind kind, ZeroDegreePolicy policy) {
    const Index n = g.num_vertices();
    switch (kind) {
    case LaplacianKind::Lplus:
        return diag_minus(g.degrees_positive(), g.positive_part());
    case LaplacianKind::Lminus:
        return diag_minus(g.degrees_negative(), g.negative_part());
    case LaplacianKind::SignedLbar:
        return diag_minus(g.degrees_abs(), g.adjacency());
    case LaplacianKind::SignedLbarSym: {
        const Vector s = inv_sqrt_or_zero(g.degrees_abs(), policy, "|degree|");
        SpMat lap = sparse_identity(n) - scaled_both_sides(g.adjacency(), s);
        lap.makeCompressed();
        return lap;
    }
    case LaplacianKind::SignedLbarRw: {
        const Vector s = inv_sqrt_or_zero(g.degrees_abs(), policy, "|degree|");
        const Vector inv = s.cwiseProduct(s); // Dbar^{-1}, zero rows stay zero
        SpMat lap = sparse_identity(n) - SpMat(inv.asDiagonal() * g.adjacency());
        lap.makeCompressed();
        return lap;
    }
    case LaplacianKind::LplusSym: {
        const Vector s = inv_sqrt_or_zero(g.degrees_positive(), policy, "positive degree");
        return scaled_both_sides(laplacian(g, LaplacianKind::Lplus), s);
    }
    case LaplacianKind::LminusSym: {
        const Vector s = inv_sqrt_or_zero(g.degrees_negative(), policy, "negative degree");
        return scaled_both_sides(laplacian(g, LaplacianKind::Lminus), s);
    }
    }
    throw Error(Errc::invalid_params, "unknown laplacian kind");
}

SignedGraph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::vector<EdgeTriple> triples;
    Index max_vertex = -1;
    Index declared_n = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            // a "# n=<count>" comment pins the vertex count (trailing isolated
            // vertices are invisible to the edge list itself)
            const auto pos = line.find("n=", first);
            if (pos != std::string::npos) declared_n = std::atoll(line.c_str() + pos + 2);
            continue;
        }
        std::istringstream ls(line);
        long long i = 0, j = 0;
        double w = 0;
        if (!(ls >> i >> j >> w))
            throw Error(Errc::parse_error, path + ":" + std::to_string(lineno));
        triples.push_back({static_cast<Index>(i), static_cast<Index>(j), w});
        max_vertex = std::max({max_vertex, static_cast<Index>(i), static_cast<Index>(j)});
    }
    return SignedGraph::from_edges(std::max(declared_n, max_vertex + 1), triples);
}

void write_edge_list(const SignedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path);
    out << "# n=" << g.num_vertices() << '\n';
    char buf[64];
    const SpMat& a = g.adjacency();
    for (int col = 0; col < a.outerSize(); ++col) {
        for (SpMat::InnerIterator it(a, col); it; ++it) {
            if (it.row() >= it.col()) continue; // upper triangle once
            std::snprintf(buf, sizeof(buf), "%.17g", it.value());
            out << it.row() << '\t' << it.col() << '\t' << buf << '\n';
        }
    }
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::vector<int> labels;
    int v = 0;
    while (in >> v) labels.push_back(v);
    return labels;
}

void write_labels(const std::vector<int>& labels, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path);
    for (int v : labels) out << v << '\n';
}

} // namespace signet

#pragma once

#include <string>
#include <vector>

#include "signet/types.hpp"

namespace signet {

struct EdgeTriple {
    Index i;
    Index j;
    double weight;
};

enum class LaplacianKind {
    Lplus,         // D+ - A+
    Lminus,        // D- - A-
    SignedLbar,    // Dbar - A
    SignedLbarSym, // I - Dbar^{-1/2} A Dbar^{-1/2}
    SignedLbarRw,  // I - Dbar^{-1} A
    LplusSym,      // (D+)^{-1/2} L+ (D+)^{-1/2}
    LminusSym,     // (D-)^{-1/2} L- (D-)^{-1/2}
};

// How normalized operators treat zero-degree vertices: Regularize zeroes the
// inverse-sqrt factor (identity row for the signed kinds), Reject throws.
enum class ZeroDegreePolicy { Regularize, Reject };

// Symmetric signed adjacency with zero diagonal. Immutable once built; the
// upper triangle supplied at construction is authoritative and mirrored.
class SignedGraph {
public:
    static SignedGraph from_edges(Index n, const std::vector<EdgeTriple>& triples);

    Index num_vertices() const { return n_; }
    Index num_edges() const { return adj_.nonZeros() / 2; }

    const SpMat& adjacency() const { return adj_; }
    SpMat positive_part() const; // max(A, 0) entrywise
    SpMat negative_part() const; // max(-A, 0) entrywise

    const Vector& degrees_abs() const { return d_abs_; }      // Dbar diag
    const Vector& degrees_positive() const { return d_pos_; } // D+ diag
    const Vector& degrees_negative() const { return d_neg_; } // D- diag

    double positive_weight() const; // total over undirected edges
    double negative_weight() const;

private:
    SignedGraph(Index n, SpMat adj);

    Index n_ = 0;
    SpMat adj_;
    Vector d_abs_, d_pos_, d_neg_;
};

SpMat laplacian(const SignedGraph& g, LaplacianKind kind,
                ZeroDegreePolicy policy = ZeroDegreePolicy::Regularize);

// edge-list text format: "i<TAB>j<TAB>w" per line, 0-based, '#' comments
SignedGraph read_edge_list(const std::string& path);
void write_edge_list(const SignedGraph& g, const std::string& path);

std::vector<int> read_labels(const std::string& path);
void write_labels(const std::vector<int>& labels, const std::string& path);

} // namespace signet

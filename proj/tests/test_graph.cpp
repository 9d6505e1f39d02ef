#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <map>

#include "signet/error.hpp"
#include "signet/graph.hpp"
#include "signet/rng.hpp"

using namespace signet;

namespace {

Matrix dense(const SpMat& m) { return Matrix(m); }

SignedGraph balanced_two_cliques() {
    // two positive 2-cliques, all cross edges negative
    return SignedGraph::from_edges(4, {{0, 1, 1},
                                       {2, 3, 1},
                                       {0, 2, -1},
                                       {0, 3, -1},
                                       {1, 2, -1},
                                       {1, 3, -1}});
}

SignedGraph random_graph(std::uint64_t seed, Index n, double density) {
    std::vector<EdgeTriple> edges;
    std::uint64_t q = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j, ++q) {
            const auto u = rng::random_unit2(seed, 0xED6E, q);
            if (u[0] < density) edges.push_back({i, j, u[1] < 0.5 ? 1.0 : -1.0});
        }
    return SignedGraph::from_edges(n, edges);
}

} // namespace

TEST_CASE("empty graph has zero degrees") {
    const auto g = SignedGraph::from_edges(3, {});
    CHECK(g.num_edges() == 0);
    CHECK(g.degrees_abs().isZero());
}

TEST_CASE("one positive and one negative edge split into the signed parts") {
    const auto g = SignedGraph::from_edges(3, {{0, 1, 1}, {1, 2, -1}});
    const Matrix ap = dense(g.positive_part());
    const Matrix an = dense(g.negative_part());
    CHECK(ap(0, 1) == 1.0);
    CHECK(ap.sum() == 2.0);
    CHECK(an(1, 2) == 1.0);
    CHECK(an.sum() == 2.0);
    CHECK(g.degrees_abs()(0) == 1.0);
    CHECK(g.degrees_abs()(1) == 2.0);
    CHECK(g.degrees_abs()(2) == 1.0);
}

TEST_CASE("repeated pairs are summed before the sign split") {
    // oracle: plain map accumulation of the triples
    const std::vector<EdgeTriple> triples = {{0, 1, 2.0}, {0, 1, -1.0}};
    std::map<std::pair<Index, Index>, double> oracle;
    for (const auto& t : triples) oracle[{0, 1}] += t.weight;
    CHECK(oracle[{0, 1}] == 1.0);

    const auto g = SignedGraph::from_edges(2, triples);
    CHECK(dense(g.positive_part())(0, 1) == 1.0);
    CHECK(dense(g.negative_part())(0, 1) == 0.0);
}

TEST_CASE("zero-sum pairs vanish from the sparse structure") {
    const auto g = SignedGraph::from_edges(2, {{0, 1, 1.0}, {1, 0, -1.0}});
    CHECK(g.num_edges() == 0);
}

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_WITH_AS(SignedGraph::from_edges(2, {{0, 2, 1.0}}),
                         doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(SignedGraph::from_edges(2, {{1, 1, 1.0}}),
                         doctest::Contains("SelfLoop"), Error);
    CHECK_THROWS_WITH_AS(SignedGraph::from_edges(2, {{0, 1, 1.0 / 0.0}}),
                         doctest::Contains("NonFiniteWeight"), Error);
}

TEST_CASE("balanced graph makes the signed laplacian singular") {
    const auto g = balanced_two_cliques();
    const Matrix lbar = dense(laplacian(g, LaplacianKind::SignedLbar));
    Eigen::SelfAdjointEigenSolver<Matrix> es(lbar);
    CHECK(es.eigenvalues()(0) == doctest::Approx(0.0).epsilon(0).scale(1e-12));
}

TEST_CASE("single edge laplacians") {
    const auto g = SignedGraph::from_edges(2, {{0, 1, 1.0}});
    const Matrix lp = dense(laplacian(g, LaplacianKind::Lplus));
    CHECK(lp(0, 0) == 1.0);
    CHECK(lp(0, 1) == -1.0);
    CHECK(lp(1, 0) == -1.0);
    CHECK(lp(1, 1) == 1.0);
    CHECK(dense(laplacian(g, LaplacianKind::Lminus)).isZero());
}

TEST_CASE("unbalanced triangle has strictly positive smallest eigenvalue") {
    const auto g = SignedGraph::from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
    Eigen::SelfAdjointEigenSolver<Matrix> es(dense(laplacian(g, LaplacianKind::SignedLbar)));
    CHECK(es.eigenvalues()(0) > 1e-6);
}

TEST_CASE("signed decomposition is exact with disjoint supports") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_graph(seed, 25, 0.3);
        const Matrix a = dense(g.adjacency());
        const Matrix ap = dense(g.positive_part());
        const Matrix an = dense(g.negative_part());
        CHECK((a - (ap - an)).cwiseAbs().maxCoeff() == 0.0);
        CHECK((ap.array() * an.array()).abs().maxCoeff() == 0.0);
        CHECK((a.diagonal().cwiseAbs()).maxCoeff() == 0.0);
        CHECK((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("signed laplacian stays positive semdefinite over many random graphs") {
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Index n = 4 + static_cast<Index>(seed % 17);
        const auto g = random_graph(seed, n, 0.4);
        Eigen::SelfAdjointEigenSolver<Matrix> es(
            dense(laplacian(g, LaplacianKind::SignedLbar)), Eigen::EigenvaluesOnly);
        worst = std::min(worst, es.eigenvalues()(0));
    }
    CHECK(worst >= -1e-10);
}

TEST_CASE("plus and minus laplacian rows sum to zero") {
    const auto g = random_graph(3, 30, 0.3);
    CHECK(dense(laplacian(g, LaplacianKind::Lplus)).rowwise().sum().cwiseAbs().maxCoeff() <
          1e-14);
    CHECK(dense(laplacian(g, LaplacianKind::Lminus)).rowwise().sum().cwiseAbs().maxCoeff() <
          1e-14);
}

TEST_CASE("normalized signed laplacian spectrum sits in [0,2] for unit weights") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = random_graph(100 + seed, 20, 0.5);
        Eigen::SelfAdjointEigenSolver<Matrix> es(
            dense(laplacian(g, LaplacianKind::SignedLbarSym)), Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues()(0) >= -1e-10);
        CHECK(es.eigenvalues()(es.eigenvalues().size() - 1) <= 2.0 + 1e-10);
    }
}

TEST_CASE("zero-degree policies") {
    const auto g = SignedGraph::from_edges(3, {{0, 1, 1.0}}); // vertex 2 isolated
    SUBCASE("regularize yields an identity row") {
        const Matrix l = dense(laplacian(g, LaplacianKind::SignedLbarSym));
        CHECK(l(2, 2) == 1.0);
        CHECK(l.row(2).sum() == 1.0);
    }
    SUBCASE("reject throws") {
        CHECK_THROWS_WITH_AS(
            laplacian(g, LaplacianKind::SignedLbarSym, ZeroDegreePolicy::Reject),
            doctest::Contains("ZeroDegreeVertex"), Error);
    }
}

TEST_CASE("random-walk laplacian matches the transported symmetric one in spectrum") {
    const auto g = random_graph(11, 15, 0.5);
    Eigen::SelfAdjointEigenSolver<Matrix> sym(
        dense(laplacian(g, LaplacianKind::SignedLbarSym)), Eigen::EigenvaluesOnly);
    const Matrix rw = dense(laplacian(g, LaplacianKind::SignedLbarRw));
    Eigen::EigenSolver<Matrix> es(rw);
    Vector rw_real = es.eigenvalues().real();
    std::sort(rw_real.begin(), rw_real.end());
    CHECK((rw_real - sym.eigenvalues()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("edge list round trip preserves the graph") {
    const auto g = random_graph(5, 12, 0.4);
    const std::string path = "roundtrip_edges.tsv";
    write_edge_list(g, path);
    const auto back = read_edge_list(path);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK((dense(back.adjacency()) - dense(g.adjacency())).cwiseAbs().maxCoeff() == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("edge list reader skips comments and keeps declared size") {
    const std::string path = "commented_edges.tsv";
    {
        std::FILE* f = std::fopen(path.c_str(), "w");
        std::fputs("# a comment line\n# n=5\n0\t1\t1.5\n", f);
        std::fclose(f);
    }
    const auto g = read_edge_list(path);
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 1);
    CHECK(dense(g.adjacency())(0, 1) == 1.5);
    std::remove(path.c_str());
}

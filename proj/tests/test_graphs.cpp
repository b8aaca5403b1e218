#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "submaj/graph.hpp"
#include "submaj/linalg.hpp"
#include "submaj/ritz.hpp"

using namespace submaj;
namespace gr = submaj::graphs;

namespace {

gr::Graph path_graph(std::size_t n) {
    std::vector<gr::Edge> edges;
    for (std::size_t i = 2; i <= n; ++i) edges.emplace_back(i, i - 1);
    return gr::Graph(n, std::move(edges));
}

gr::Graph star_graph(std::size_t n) {
    std::vector<gr::Edge> edges;
    for (std::size_t i = 2; i <= n; ++i) edges.emplace_back(i, std::size_t{1});
    return gr::Graph(n, std::move(edges));
}

gr::Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    auto all = gr::complete_graph(n).edges();
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    return gr::Graph(n, std::move(all));
}

}  // namespace

TEST_CASE("graph construction canonicalizes and validates") {
    const gr::Graph g(3, {{1, 2}, {3, 2}});
    CHECK(g.edges() == std::vector<gr::Edge>{{2, 1}, {3, 2}});
    CHECK_THROWS_AS(gr::Graph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(gr::Graph(3, {{4, 1}}), Error);
    CHECK_THROWS_AS(gr::Graph(3, {{2, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(gr::Graph(0, {}), Error);
}

TEST_CASE("complete graph and canonical edge order") {
    const auto k3 = gr::complete_graph(3);
    CHECK(k3.edges() == std::vector<gr::Edge>{{2, 1}, {3, 1}, {3, 2}});
    const auto k6 = gr::complete_graph(6);
    CHECK(k6.edge_count() == 15);
    for (std::size_t k = 0; k < k6.edge_count(); ++k) {
        CHECK(gr::canonical_edge_index(k6.edges()[k]) == k);
    }
    CHECK_THROWS_AS(gr::complete_graph(1), Error);
}

TEST_CASE("incidence matrix signs") {
    const Matrix q = gr::incidence_matrix(gr::Graph(3, {{2, 1}}));
    CHECK(q(0, 0) == -1.0);
    CHECK(q(1, 0) == 1.0);
    CHECK(q(2, 0) == 0.0);
    CHECK_THROWS_AS(gr::incidence_matrix(gr::Graph(3, {})), Error);
}

TEST_CASE("vertex Laplacian fixtures") {
    const Matrix l = gr::vertex_laplacian(path_graph(3));
    CHECK((l - Matrix{{1.0, -1.0, 0.0}, {-1.0, 2.0, -1.0}, {0.0, -1.0, 1.0}}).norm_max() <
          1e-15);

    // Row sums vanish and the spectrum has a zero per connected component.
    for (std::size_t n = 2; n <= 6; ++n) {
        const Matrix lk = gr::vertex_laplacian(gr::complete_graph(n));
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += lk(i, j);
            CHECK(std::abs(row) < 1e-14);
        }
        const auto spec = gr::vertex_spectrum(gr::complete_graph(n));
        CHECK(spec.source == "vertex-laplacian");
        CHECK(std::abs(spec.values.back()) < 1e-9);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            CHECK(spec.values[k] == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
        }
    }
}

TEST_CASE("edge Laplacian fixtures") {
    const Matrix single = gr::edge_laplacian(gr::Graph(2, {{2, 1}}));
    CHECK(single(0, 0) == doctest::Approx(2.0));

    const Matrix k = gr::edge_laplacian(path_graph(3));
    CHECK((k - Matrix{{2.0, -1.0}, {-1.0, 2.0}}).norm_max() < 1e-15);
    const auto spec = gr::edge_spectrum(path_graph(3));
    CHECK(spec.values[0] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(spec.values[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("vertex and edge Laplacians share their nonzero spectrum") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 4 + seed % 5;
        const auto g = random_graph(n, 2 + seed % (n - 1), seed);
        auto lv = gr::vertex_spectrum(g).values;
        auto le = gr::edge_spectrum(g).values;
        const auto nonzero = [](std::vector<double> v) {
            v.erase(std::remove_if(v.begin(), v.end(),
                                   [](double t) { return std::abs(t) < 1e-8; }),
                    v.end());
            return v;
        };
        lv = nonzero(lv);
        le = nonzero(le);
        REQUIRE(lv.size() == le.size());
        for (std::size_t i = 0; i < lv.size(); ++i) {
            CHECK(lv[i] == doctest::Approx(le[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("weighted complete-incidence factorization reproduces the Laplacian") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 3 + seed % 6;
        const auto g = random_graph(n, 1 + seed % (n * (n - 1) / 2), seed + 31);
        CHECK((gr::laplacian_via_complete_incidence(g) - gr::vertex_laplacian(g)).norm_max() <
              1e-12);
    }
}

TEST_CASE("edge selector realizes the edge Laplacian as a restriction") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 4 + seed % 4;
        const auto g = random_graph(n, 2 + seed % (n - 1), seed + 77);
        const auto sel = gr::edge_selector(g);
        CHECK(sel.ambient_dim == n * (n - 1) / 2);
        CHECK(sel.dim() == g.edge_count());
        const Matrix kc = gr::edge_laplacian(gr::complete_graph(n));
        const auto restricted = ritz::ritz_values(kc, sel);
        const auto direct = linalg::sym_eig(gr::edge_laplacian(g)).values;
        REQUIRE(restricted.values.size() == direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) {
            CHECK(restricted.values[i] == doctest::Approx(direct[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("spectra_compare on the path/star fixture") {
    const auto rep = gr::spectra_compare(path_graph(4), star_graph(4));
    CHECK(rep.holds);
    CHECK(rep.differing == 2);
    CHECK(rep.rhs == doctest::Approx(8.0));
    CHECK(rep.lhs == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.sharpened_rhs <= rep.rhs + 1e-12);
    CHECK(rep.lhs <= rep.sharpened_rhs + 1e-9);

    const double sqrt2 = std::sqrt(2.0);
    CHECK(rep.spectrum1[0] == doctest::Approx(2.0 + sqrt2).epsilon(1e-9));
    CHECK(rep.spectrum1[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.spectrum1[2] == doctest::Approx(2.0 - sqrt2).epsilon(1e-9));
    CHECK(std::abs(rep.spectrum1[3]) < 1e-9);
    CHECK(rep.spectrum2[0] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rep.spectrum2[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("spectra_compare degenerate and error cases") {
    const auto same = gr::spectra_compare(path_graph(4), path_graph(4));
    CHECK(same.holds);
    CHECK(same.differing == 0);
    CHECK(same.lhs == doctest::Approx(0.0));

    const auto empty = gr::spectra_compare(gr::Graph(3, {}), gr::Graph(3, {}));
    CHECK(empty.holds);
    CHECK(empty.lhs == 0.0);

    CHECK_THROWS_AS(gr::spectra_compare(path_graph(4), path_graph(5)), Error);
    CHECK_THROWS_AS(gr::spectra_compare(path_graph(4), gr::Graph(4, {{2, 1}})), Error);
}

TEST_CASE("spectra_compare holds for random same-size pairs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 3 + seed % 8;
        std::mt19937_64 rng(seed + 1000);
        const std::size_t m = 1 + rng() % (n * (n - 1) / 2);
        const auto g1 = random_graph(n, m, 3 * seed);
        const auto g2 = random_graph(n, m, 3 * seed + 1);
        const auto rep = gr::spectra_compare(g1, g2);
        CHECK(rep.holds);
        CHECK(rep.lhs <= rep.sharpened_rhs + rep.tolerance_used);
        CHECK(rep.sharpened_rhs <= rep.rhs + 1e-9);
    }
}

TEST_CASE("spectra are invariant under vertex relabeling") {
    const auto g = random_graph(6, 7, 404);
    std::vector<std::size_t> perm{3, 6, 1, 5, 2, 4};  // image of vertex v is perm[v-1]
    std::vector<gr::Edge> relabeled;
    for (const auto& [i, j] : g.edges()) relabeled.emplace_back(perm[i - 1], perm[j - 1]);
    const gr::Graph h(6, std::move(relabeled));
    const auto sg = gr::vertex_spectrum(g).values;
    const auto sh = gr::vertex_spectrum(h).values;
    for (std::size_t k = 0; k < sg.size(); ++k) {
        CHECK(sg[k] == doctest::Approx(sh[k]).epsilon(1e-9));
    }
}

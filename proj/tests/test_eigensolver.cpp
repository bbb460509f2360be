#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inhclust/eigensolver.hpp"
#include "inhclust/rng.hpp"
#include "support/test_util.hpp"

using namespace inhclust;
using namespace inhclust::testing;

TEST_CASE("diagonal and 1x1") {
    EigenDecomposition one = eigen_symmetric({4.0}, 1);
    CHECK(one.values[0] == 4.0);

    EigenDecomposition d = eigen_symmetric({3, 0, 0, 0, 1, 0, 0, 0, 2}, 3);
    CHECK(near(d.values[0], 1.0, 1e-12));
    CHECK(near(d.values[1], 2.0, 1e-12));
    CHECK(near(d.values[2], 3.0, 1e-12));
}

TEST_CASE("2x2 closed form") {
    // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
    EigenDecomposition e = eigen_symmetric({2, 1, 1, 2}, 2);
    CHECK(near(e.values[0], 1.0, 1e-12));
    CHECK(near(e.values[1], 3.0, 1e-12));
}

TEST_CASE("normalized laplacian spectra of K2 and K3") {
    EigenDecomposition k2 = eigen_symmetric({1, -1, -1, 1}, 2);
    CHECK(near(k2.values[0], 0.0, 1e-12));
    CHECK(near(k2.values[1], 2.0, 1e-12));

    double h = -0.5;
    EigenDecomposition k3 = eigen_symmetric({1, h, h, h, 1, h, h, h, 1}, 3);
    CHECK(near(k3.values[0], 0.0, 1e-12));
    CHECK(near(k3.values[1], 1.5, 1e-12));
    CHECK(near(k3.values[2], 1.5, 1e-12));
}

TEST_CASE("residuals, orthogonality and trace on random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_index(24));
        std::vector<double> a(n * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                a[i * n + j] = a[j * n + i] = rng.uniform(-1.0, 1.0);
        EigenDecomposition e = eigen_symmetric(a, n);

        double trace = 0.0, sum = 0.0;
        for (int i = 0; i < n; ++i) trace += a[i * n + i];
        for (double v : e.values) sum += v;
        CHECK(near(trace, sum, 1e-9 * n));

        for (int j = 0; j + 1 < n; ++j) CHECK(e.values[j] <= e.values[j + 1]);

        for (int j = 0; j < n; ++j) {
            std::vector<double> v = e.eigenvector(j);
            double resid = 0.0, norm = 0.0;
            for (int i = 0; i < n; ++i) {
                double row = 0.0;
                for (int t = 0; t < n; ++t) row += a[i * n + t] * v[t];
                resid = std::max(resid, std::fabs(row - e.values[j] * v[i]));
                norm += v[i] * v[i];
            }
            CHECK(resid <= 1e-10);
            CHECK(near(norm, 1.0, 1e-10));
        }
        // Pairwise orthogonality.
        for (int j = 0; j < std::min(n, 6); ++j) {
            for (int k = j + 1; k < std::min(n, 6); ++k) {
                std::vector<double> vj = e.eigenvector(j), vk = e.eigenvector(k);
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += vj[i] * vk[i];
                CHECK(std::fabs(dot) <= 1e-9);
            }
        }
    }
}

TEST_CASE("deterministic across calls") {
    Rng rng(4);
    int n = 12;
    std::vector<double> a(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = rng.uniform();
    EigenDecomposition e1 = eigen_symmetric(a, n);
    EigenDecomposition e2 = eigen_symmetric(a, n);
    CHECK(e1.values == e2.values);
    CHECK(e1.vectors == e2.vectors);
}

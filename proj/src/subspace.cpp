#include "inhclust/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "inhclust/eigensolver.hpp"
#include "inhclust/parallel.hpp"

namespace inhclust {

double inh_deviation(const std::vector<std::vector<double>>& pts, int v, int p) {
    int psi = static_cast<int>(pts.size());
    if (v < 0 || v >= psi) throw std::invalid_argument("point index out of range");
    if (p < 0) throw std::invalid_argument("subspace dimension must be nonnegative");
    if (psi - 1 < p + 1)
        throw std::invalid_argument("not enough points to span the subspace");
    int dim = static_cast<int>(pts[v].size());
    for (const auto& x : pts)
        if (static_cast<int>(x.size()) != dim)
            throw std::invalid_argument("points have mixed dimensions");

    // Centered scatter of the remaining points.
    std::vector<double> mean(dim, 0.0);
    int m = psi - 1;
    for (int i = 0; i < psi; ++i) {
        if (i == v) continue;
        for (int t = 0; t < dim; ++t) mean[t] += pts[i][t];
    }
    for (double& x : mean) x /= m;
    std::vector<double> scatter(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < psi; ++i) {
        if (i == v) continue;
        for (int a = 0; a < dim; ++a) {
            double da = pts[i][a] - mean[a];
            for (int b = a; b < dim; ++b) {
                double val = da * (pts[i][b] - mean[b]);
                scatter[static_cast<std::size_t>(a) * dim + b] += val;
                if (a != b) scatter[static_cast<std::size_t>(b) * dim + a] += val;
            }
        }
    }

    EigenDecomposition eig = eigen_symmetric(scatter, dim);
    double trace = 0.0;
    for (double ev : eig.values) trace += std::fabs(ev);
    double rank_tol = 1e-12 * std::max(trace, 1.0);

    std::vector<double> centered(dim);
    double norm2 = 0.0;
    for (int t = 0; t < dim; ++t) {
        centered[t] = pts[v][t] - mean[t];
        norm2 += centered[t] * centered[t];
    }
    // Project onto the top-p principal directions that carry actual spread;
    // directions with (near) zero eigenvalue are skipped, which yields the
    // distance to the lower-dimensional affine hull for degenerate sets.
    double proj2 = 0.0;
    int used = 0;
    for (int j = dim - 1; j >= 0 && used < p; --j) {
        if (eig.values[j] <= rank_tol) break;
        double dot = 0.0;
        for (int t = 0; t < dim; ++t)
            dot += centered[t] * eig.vectors[static_cast<std::size_t>(t) * dim + j];
        proj2 += dot * dot;
        ++used;
    }
    double rest = norm2 - proj2;
    return rest > 0.0 ? std::sqrt(rest) : 0.0;
}

namespace {

double binomial_capped(int n, int k, double cap) {
    double result = 1.0;
    for (int t = 0; t < k; ++t) {
        result *= static_cast<double>(n - t) / (t + 1);
        if (result > cap) return cap;
    }
    return result;
}

} // namespace

SubspaceHypergraph build_subspace_hypergraph(const PointCloud& pc,
                                             const SubspaceConfig& cfg) {
    int n = static_cast<int>(pc.points.size());
    int psi = cfg.psi > 0 ? cfg.psi : cfg.p + 2;
    if (psi < cfg.p + 2) throw std::invalid_argument("psi must be at least p + 2");
    if (n < psi) throw std::invalid_argument("not enough points for one hyperedge");
    if (cfg.sample_count < 1) throw std::invalid_argument("sample_count must be positive");
    if (cfg.theta < 0.0) throw std::invalid_argument("theta must be nonnegative");

    // Distinct psi-subsets, uniform. When the request exceeds the available
    // count, every subset is taken.
    std::vector<std::vector<VertexId>> samples;
    double available = binomial_capped(n, psi, 1e18);
    if (static_cast<double>(cfg.sample_count) >= available) {
        std::vector<int> comb(psi);
        for (int i = 0; i < psi; ++i) comb[i] = i;
        while (true) {
            samples.emplace_back(comb.begin(), comb.end());
            int pos = psi - 1;
            while (pos >= 0 && comb[pos] == n - psi + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (int t = pos + 1; t < psi; ++t) comb[t] = comb[t - 1] + 1;
        }
    } else {
        Rng rng(cfg.seed);
        std::set<std::vector<VertexId>> seen;
        while (static_cast<int>(samples.size()) < cfg.sample_count) {
            std::vector<VertexId> subset;
            std::set<VertexId> picked;
            while (static_cast<int>(picked.size()) < psi)
                picked.insert(static_cast<VertexId>(rng.uniform_index(n)));
            subset.assign(picked.begin(), picked.end());
            if (seen.insert(subset).second) samples.push_back(std::move(subset));
        }
    }

    // Deviations per (edge, member).
    std::vector<std::vector<double>> deviations(samples.size());
    parallel_for(samples.size(), [&](std::size_t idx) {
        std::vector<std::vector<double>> pts;
        pts.reserve(psi);
        for (VertexId v : samples[idx]) pts.push_back(pc.points[v]);
        std::vector<double> d(psi);
        for (int v = 0; v < psi; ++v) d[v] = inh_deviation(pts, v, cfg.p);
        deviations[idx] = std::move(d);
    });

    double theta = cfg.theta;
    if (theta <= 0.0) {
        std::vector<double> all;
        all.reserve(samples.size() * psi);
        for (const auto& d : deviations) all.insert(all.end(), d.begin(), d.end());
        std::sort(all.begin(), all.end());
        std::size_t mid = all.size() / 2;
        theta = all.size() % 2 == 1 ? all[mid] : 0.5 * (all[mid - 1] + all[mid]);
        if (theta < 1e-12) theta = 1e-12;
    }

    std::vector<Hyperedge> edges;
    std::vector<double> mean_dev;
    edges.reserve(samples.size());
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        std::vector<double> weights(psi);
        double mean = 0.0;
        for (int v = 0; v < psi; ++v) {
            double d = deviations[idx][v];
            weights[v] = std::exp(-d * d / (theta * theta));
            mean += d;
        }
        mean_dev.push_back(mean / psi);
        edges.push_back(Hyperedge{samples[idx], CutCost::singleton_only(weights)});
    }
    return SubspaceHypergraph{Hypergraph(n, std::move(edges)), std::move(samples),
                              std::move(mean_dev), theta};
}

PointCloud generate_klines(int k, int per_line, double noise_sigma,
                           std::uint64_t seed) {
    static const std::vector<std::vector<std::array<double, 3>>> directions = {
        {{0.97, 0.26, 0.00}, {0.97, -0.26, 0.00}},
        {{0.95, 0.30, 0.00}, {0.95, -0.15, 0.26}, {0.95, -0.15, -0.26}},
        {{0.93, 0.37, 0.00}, {0.93, 0.00, 0.37}, {0.93, -0.37, 0.00},
         {0.93, 0.00, -0.37}}};
    if (k < 2 || k > 4)
        throw std::invalid_argument("line directions available for k = 2, 3, 4");
    if (per_line < 1) throw std::invalid_argument("per_line must be positive");

    Rng rng(seed);
    PointCloud pc;
    pc.dim = 3;
    for (int line = 0; line < k; ++line) {
        std::array<double, 3> dir = directions[k - 2][line];
        double norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
        for (auto& x : dir) x /= norm;
        for (int i = 0; i < per_line; ++i) {
            double t = rng.uniform(-1.0, 1.0);
            std::vector<double> point(3);
            for (int a = 0; a < 3; ++a)
                point[a] = t * dir[a] + noise_sigma * rng.gaussian();
            pc.points.push_back(std::move(point));
            pc.labels.push_back(line);
        }
    }
    return pc;
}

double misclassification_rate(const Partition& predicted,
                              const std::vector<int>& truth) {
    int n = static_cast<int>(truth.size());
    if (static_cast<int>(predicted.assignment.size()) != n)
        throw std::invalid_argument("prediction and truth cover different vertex sets");
    int k_truth = 0;
    for (int t : truth) k_truth = std::max(k_truth, t + 1);
    if (predicted.k != k_truth)
        throw std::invalid_argument("cluster counts differ between prediction and truth");
    int k = predicted.k;
    if (k > 20) throw std::invalid_argument("too many clusters for bijection search");

    // Confusion counts; unassigned (excluded) vertices never match.
    std::vector<std::vector<int>> confusion(k, std::vector<int>(k, 0));
    for (int v = 0; v < n; ++v) {
        int c = predicted.assignment[v];
        if (c >= 0) ++confusion[c][truth[v]];
    }
    // Max-agreement assignment over bijections by subset DP.
    std::vector<int> dp(std::size_t{1} << k, -1);
    dp[0] = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (dp[mask] < 0) continue;
        int row = subset_size(mask);
        if (row == k) continue;
        for (int col = 0; col < k; ++col) {
            if (mask & (std::uint64_t{1} << col)) continue;
            std::uint64_t next = mask | (std::uint64_t{1} << col);
            dp[next] = std::max(dp[next], dp[mask] + confusion[row][col]);
        }
    }
    int best = dp[(std::size_t{1} << k) - 1];
    return 100.0 * static_cast<double>(n - best) / n;
}

SubspaceResult segment_subspaces(const PointCloud& pc, int k,
                                 const SubspaceConfig& cfg) {
    SubspaceHypergraph sh = build_subspace_hypergraph(pc, cfg);
    PartitionOptions opt;
    opt.method = ProjectionMethod::Singleton;
    opt.clip = true;
    SubspaceResult out;
    out.partition = kway_partition(sh.hypergraph, k, cfg.seed, opt);
    out.theta_used = sh.theta_used;
    if (!pc.labels.empty())
        out.error_percent = misclassification_rate(out.partition, pc.labels);
    return out;
}

} // namespace inhclust

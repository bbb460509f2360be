// oracle.hpp - brute-force references and randomized test-input generators
#ifndef INHCLUST_ORACLE_HPP
#define INHCLUST_ORACLE_HPP

#include <vector>

#include "inhclust/rng.hpp"
#include "inhclust/spectral.hpp"

namespace inhclust {

struct BruteForceCut {
    CutSelection best;  // contains vertex 0; lexicographically smallest on ties
    double value = 0.0; // alpha_H
};

// Exhaustive minimum of the normalized cut over all nontrivial cut classes.
// Active vertex count must not exceed 20.
BruteForceCut brute_force_ncut(const Hypergraph& h);

struct FeasibilityRatio {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    int zero_violations = 0; // zero-cost classes whose projected cut is nonzero
};

// Exhaustive audit of the projection sandwich: ratios of projected cut value
// to cost over all positive-cost classes; zero-cost classes must project to
// zero within 1e-9.
FeasibilityRatio feasibility_ratio(const Hyperedge& e, const EdgeProjection& proj);

// Samples symmetric submodular tables as latent-graph cuts plus a concave
// function of the subset size. Every sample is re-verified.
class SubmodularGenerator {
public:
    SubmodularGenerator(int arity, std::uint64_t seed, double graph_mix = 1.0,
                        double concave_mix = 1.0);

    CutCost next();
    // Pure latent-graph sample; latent pair weights written to latent_out
    // (arity x arity symmetric).
    CutCost next_latent(std::vector<double>* latent_out);

    int arity() const { return arity_; }

private:
    CutCost from_latent_and_concave(const std::vector<double>& latent,
                                    const std::vector<double>& concave);
    int arity_;
    double graph_mix_;
    double concave_mix_;
    Rng rng_;
};

struct Theorem1Report {
    double alpha_h = 0.0;      // brute-force hypergraph optimum
    double alpha_star = 0.0;   // hypergraph NCut of the pipeline output
    double alpha_graph = 0.0;  // graph NCut of the sweep output
    double lambda2 = 0.0;
    double beta_star = 1.0;
    bool chain_ok = false;     // alpha_star >= alpha_h and beta^3 alpha_h >= alpha_star^2 / 8
    bool cheeger_ok = false;   // lambda2 <= alpha_graph and lambda2 >= alpha_graph^2 / 8
};

// Runs the full pipeline next to the exhaustive oracle and verifies the
// quadratic approximation chain. Refuses clipped or uncertified projections.
Theorem1Report theorem1_audit(const Hypergraph& h,
                              const PartitionOptions& options = {});

} // namespace inhclust

#endif // INHCLUST_ORACLE_HPP

// io.hpp - file ingestion and JSON artifacts
#ifndef INHCLUST_IO_HPP
#define INHCLUST_IO_HPP

#include <string>

#include <json.hpp>

#include "inhclust/motif.hpp"
#include "inhclust/projection.hpp"
#include "inhclust/ranking.hpp"
#include "inhclust/spectral.hpp"
#include "inhclust/subspace.hpp"

namespace inhclust {

using json = nlohmann::json;

// Cut costs: {"type":"table","entries":[{"subset":[..],"w":..}]} |
// {"type":"singleton","values":[..]} | {"type":"zhou","w":..} |
// {"type":"benson","w":..}. Subset entries are positions within the edge.
json cost_to_json(const CutCost& cost);
CutCost cost_from_json(const json& j, int arity);

// Hypergraphs: {"n":int,"edges":[{"vertices":[..],"cost":{..}}]}.
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);
Hypergraph load_hypergraph(const std::string& path);

// Directed edge list: one "u v" pair per line, 0-based ids.
DiGraph load_edgelist(const std::string& path);

// Rankings: comma-separated candidate ids in rank order, one per line.
RankingDataset load_rankings(const std::string& path);

// Points: comma-separated floats, optional "| label" suffix.
PointCloud load_points(const std::string& path);

// Partition artifact: {k, ncut, beta_star, clusters, excluded}.
json partition_to_json(const Partition& p);

json projection_report_to_json(const ProjectionOutcome& outcome);
void write_graph_edgelist(const ProjectedGraph& g, const std::string& path);

json cluster_tree_to_json(const ClusterNode& node);

void write_json(const json& j, const std::string& path);
json read_json(const std::string& path);

} // namespace inhclust

#endif // INHCLUST_IO_HPP

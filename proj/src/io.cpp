#include "inhclust/io.hpp"

#include <fstream>
#include <sstream>

namespace inhclust {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

[[noreturn]] void parse_error(const std::string& path, int line,
                              const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

} // namespace

json cost_to_json(const CutCost& cost) {
    json j;
    switch (cost.kind()) {
    case CostKind::Table: {
        j["type"] = "table";
        json entries = json::array();
        for_each_cut_class(cost.arity(), [&](std::uint64_t mask) {
            auto w = cost.value(mask);
            if (!w) return;
            json subset = json::array();
            for (int v = 0; v < cost.arity(); ++v)
                if (mask & (std::uint64_t{1} << v)) subset.push_back(v);
            entries.push_back({{"subset", subset}, {"w", *w}});
        });
        j["entries"] = entries;
        break;
    }
    case CostKind::SingletonOnly:
        j["type"] = "singleton";
        j["values"] = cost.singletons();
        break;
    case CostKind::Zhou:
        j["type"] = "zhou";
        j["w"] = cost.scalar();
        break;
    case CostKind::Benson:
        j["type"] = "benson";
        j["w"] = cost.scalar();
        break;
    }
    return j;
}

CutCost cost_from_json(const json& j, int arity) {
    std::string type = j.at("type").get<std::string>();
    if (type == "table") {
        std::vector<std::pair<std::uint64_t, double>> entries;
        for (const json& e : j.at("entries")) {
            std::uint64_t mask = 0;
            for (int pos : e.at("subset").get<std::vector<int>>()) {
                if (pos < 0 || pos >= arity)
                    throw std::runtime_error("subset position out of range");
                mask |= std::uint64_t{1} << pos;
            }
            entries.emplace_back(mask, e.at("w").get<double>());
        }
        return CutCost::table(arity, entries);
    }
    if (type == "singleton") {
        auto values = j.at("values").get<std::vector<double>>();
        if (static_cast<int>(values.size()) != arity)
            throw std::runtime_error("singleton value count must equal the arity");
        return CutCost::singleton_only(values);
    }
    if (type == "zhou") return CutCost::zhou(arity, j.at("w").get<double>());
    if (type == "benson") return CutCost::benson(arity, j.at("w").get<double>());
    throw std::runtime_error("unknown cost type '" + type + "'");
}

json hypergraph_to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const Hyperedge& e : h.edges())
        edges.push_back({{"vertices", e.vertices}, {"cost", cost_to_json(e.cost)}});
    return {{"n", h.vertex_count()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Hyperedge> edges;
    for (const json& je : j.at("edges")) {
        auto vertices = je.at("vertices").get<std::vector<VertexId>>();
        CutCost cost = cost_from_json(je.at("cost"), static_cast<int>(vertices.size()));
        edges.push_back(Hyperedge{std::move(vertices), std::move(cost)});
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph load_hypergraph(const std::string& path) {
    return hypergraph_from_json(read_json(path));
}

DiGraph load_edgelist(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId max_id = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        long long u, v;
        if (!(ss >> u >> v) || u < 0 || v < 0)
            parse_error(path, lineno, "expected 'u v' with nonnegative ids");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_id = std::max({max_id, static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    return DiGraph(edges.empty() ? 0 : static_cast<int>(max_id) + 1, edges);
}

RankingDataset load_rankings(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::vector<int>> orders;
    std::string line;
    int lineno = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<int> order;
        std::istringstream ss(line);
        std::string token;
        while (std::getline(ss, token, ',')) {
            try {
                order.push_back(std::stoi(token));
            } catch (...) {
                parse_error(path, lineno, "invalid candidate id '" + token + "'");
            }
        }
        if (n < 0)
            n = static_cast<int>(order.size());
        else if (static_cast<int>(order.size()) != n)
            parse_error(path, lineno, "ranking length differs from the first line");
        orders.push_back(std::move(order));
    }
    if (n <= 0) throw std::runtime_error(path + ": no rankings found");
    try {
        return RankingDataset(n, orders);
    } catch (const std::exception& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
}

PointCloud load_points(const std::string& path) {
    std::ifstream in = open_input(path);
    PointCloud pc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::string coords = line;
        int label = -1;
        auto bar = line.find('|');
        if (bar != std::string::npos) {
            coords = line.substr(0, bar);
            try {
                label = std::stoi(line.substr(bar + 1));
            } catch (...) {
                parse_error(path, lineno, "invalid label after '|'");
            }
        }
        std::vector<double> point;
        std::istringstream ss(coords);
        std::string token;
        while (std::getline(ss, token, ',')) {
            try {
                point.push_back(std::stod(token));
            } catch (...) {
                parse_error(path, lineno, "invalid coordinate '" + token + "'");
            }
        }
        if (point.empty()) parse_error(path, lineno, "empty point");
        if (pc.dim == 0)
            pc.dim = static_cast<int>(point.size());
        else if (static_cast<int>(point.size()) != pc.dim)
            parse_error(path, lineno, "point dimension differs from the first line");
        pc.points.push_back(std::move(point));
        if (label >= 0) pc.labels.push_back(label);
    }
    if (pc.points.empty()) throw std::runtime_error(path + ": no points found");
    if (!pc.labels.empty() && pc.labels.size() != pc.points.size())
        throw std::runtime_error(path + ": labels must cover every point or none");
    return pc;
}

json partition_to_json(const Partition& p) {
    json clusters = json::array();
    for (const CutSelection& c : p.clusters()) clusters.push_back(c.vertices);
    json j = {{"k", p.k},
              {"ncut", p.ncut},
              {"clusters", clusters},
              {"excluded", p.excluded}};
    if (p.beta_star)
        j["beta_star"] = *p.beta_star;
    else
        j["beta_star"] = nullptr;
    return j;
}

json projection_report_to_json(const ProjectionOutcome& outcome) {
    json edges = json::array();
    for (const EdgeReport& r : outcome.reports) {
        json e = {{"index", r.index},
                  {"method", r.method},
                  {"negatives_count", r.negatives}};
        if (r.beta)
            e["beta"] = *r.beta;
        else
            e["beta"] = nullptr;
        edges.push_back(e);
    }
    json j = {{"edges", edges},
              {"clipped", outcome.graph.clipped},
              {"negative_merged", outcome.graph.negative_count},
              {"infeasible", outcome.infeasible}};
    if (outcome.graph.beta_star)
        j["beta_star"] = *outcome.graph.beta_star;
    else
        j["beta_star"] = nullptr;
    return j;
}

void write_graph_edgelist(const ProjectedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(17);
    for (const GraphEdge& e : g.edges)
        out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

json cluster_tree_to_json(const ClusterNode& node) {
    json children = json::array();
    for (const ClusterNode& c : node.children) children.push_back(cluster_tree_to_json(c));
    return {{"cluster", node.cluster},
            {"uncovered", node.uncovered},
            {"children", children}};
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
    std::ifstream in = open_input(path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
    return j;
}

} // namespace inhclust

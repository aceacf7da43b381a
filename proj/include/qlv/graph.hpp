#ifndef QLV_GRAPH_HPP
#define QLV_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "qlv/errors.hpp"
#include "qlv/karith.hpp"

namespace qlv {

// Finite directed graph with per-vertex feature vectors over K. Edges form a
// set (no multi-edges); self-loops are allowed. Immutable in spirit: build
// once, evaluate concurrently.
class LabeledGraph {
public:
    LabeledGraph(int vertices, int features)
        : n_(vertices), f_(features), labels_(static_cast<std::size_t>(vertices) * features, 0),
          succ_(vertices) {
        if (vertices < 1) throw ValidationError("graph needs at least one vertex");
        if (features < 0) throw ValidationError("negative feature arity");
    }

    int vertex_count() const { return n_; }
    int feature_arity() const { return f_; }

    void set_label(int v, int feature, int value) {
        labels_[static_cast<std::size_t>(v) * f_ + feature] = value;
    }
    int label(int v, int feature) const {
        return labels_[static_cast<std::size_t>(v) * f_ + feature];
    }
    const std::vector<int>& raw_labels() const { return labels_; }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ValidationError("edge endpoint out of range");
        for (int w : succ_[u])
            if (w == v) throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                                              std::to_string(v) + ")");
        succ_[u].push_back(v);
        edge_count_++;
    }

    bool has_edge(int u, int v) const {
        for (int w : succ_[u])
            if (w == v) return true;
        return false;
    }

    // Successors in ascending vertex order (the tie-break order of the
    // aggregation rule).
    const std::vector<int>& successors(int u) const { return succ_[u]; }
    int edge_count() const { return edge_count_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (int v : succ_[u]) out.emplace_back(u, v);
        return out;
    }

    void sort_adjacency();

    void validate_labels(const KConfig& cfg) const {
        for (int v : labels_)
            if (!cfg.contains(v)) throw RangeError("label outside K");
    }

private:
    int n_;
    int f_;
    int edge_count_ = 0;
    std::vector<int> labels_;
    std::vector<std::vector<int>> succ_;
};

// JSON schema: { "features": F, "vertices": N, "labels": [[...F ints...] xN],
// "edges": [[u,v], ...] }. All label values validated against cfg.
LabeledGraph graph_from_json(const std::string& text, const KConfig& cfg);
std::string graph_to_json(const LabeledGraph& g);

LabeledGraph load_graph_file(const std::string& path, const KConfig& cfg);

}  // namespace qlv

#endif  // QLV_GRAPH_HPP

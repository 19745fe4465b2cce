#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cutkit/field.hpp"

namespace cutkit {

// Vertex-labeled multigraph. Undirected graphs are stored as symmetric arc
// pairs; `directed` only records which reading the instance came with.
// Self-loops are permitted but ignored by all cut logic.
struct Graph {
    bool directed = true;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> arcs;

    Graph() = default;
    explicit Graph(bool directed_) : directed(directed_) {}

    int n() const { return (int)labels.size(); }
    int add_vertex(std::string label);
    void add_arc(int u, int v);
    // Adds both orientations.
    void add_edge(int u, int v);

    bool has_arc(int u, int v) const;
    std::vector<std::vector<int>> out_adj() const;
    std::vector<std::vector<int>> in_adj() const;
    // Neighbors along either orientation, deduplicated, self excluded.
    std::vector<int> neighbors(int v) const;

    int index_of_label(const std::string& label) const; // -1 when absent
    void check_vertex(int v) const;

    // Canonical arc order plus duplicate removal; keeps output byte-stable.
    void normalize();
};

Graph reverse(const Graph& g);

std::vector<int> reachable_from(const Graph& g, const std::vector<int>& sources);

// Adds v' for each v in x, duplicating the incoming arcs of v (undirected
// edges oriented inwards). Returns the new graph and the copy ids.
Graph add_sink_only_copies(const Graph& g, const std::vector<int>& x,
                           std::vector<int>* copy_ids = nullptr);

// Mirror of the sink-only construction: v- carries the outgoing arcs of v.
Graph add_source_copies(const Graph& g, const std::vector<int>& x,
                        std::vector<int>* copy_ids = nullptr);

// Private source per x: a fresh vertex x- whose single arc is x- -> x.
Graph add_private_sources(const Graph& g, const std::vector<int>& x,
                          std::vector<int>* copy_ids = nullptr);

// Removes v; undirected neighbors become a clique, in the directed case every
// in-neighbor gets an arc to every out-neighbor. No parallel duplicates.
// old_to_new maps prior ids to ids in the result (-1 for v).
Graph bypass_vertex(const Graph& g, int v, std::vector<int>* old_to_new = nullptr);

// Replaces v by k+1 mutually adjacent twins sharing v's neighborhood.
// twin_ids receives the ids of the copies (the first reuses v's slot).
Graph make_heavy(const Graph& g, int v, int k, std::vector<int>* twin_ids = nullptr);

} // namespace cutkit

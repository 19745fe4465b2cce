#pragma once

#include <optional>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

// Cut queries follow the convention that (S, T)-cuts may intersect S and T;
// vertices outside `deletable` get infinite capacity instead.
struct CutQuery {
    std::vector<int> sources;
    std::vector<int> sinks;
    std::vector<char> deletable; // empty means all of V

    CutQuery() = default;
    CutQuery(std::vector<int> s, std::vector<int> t)
        : sources(std::move(s)), sinks(std::move(t)) {}
};

struct CutResult {
    bool cuttable = true;
    std::vector<int> cut;   // sorted vertex ids; meaningful when cuttable
    int flow_value = 0;     // max number of vertex-disjoint S->T paths when cuttable

    int size() const { return (int)cut.size(); }
};

// Minimum-cardinality deletable vertex set meeting every S->T path, computed
// by vertex splitting and unit-capacity augmenting paths. The returned cut is
// the one closest to S (minimal residual source region). An S->T path through
// only undeletable vertices yields cuttable = false.
CutResult min_vertex_cut(const Graph& g, const CutQuery& q);

// C(X): the minimum (S, X)-cut closest to S. If X is a closest set then the
// result equals X.
CutResult closest_cut(const Graph& g, const std::vector<int>& sources,
                      const std::vector<int>& x,
                      const std::vector<char>& deletable = {});

// Vertices reachable from S after deleting C (deleted sources drop out).
std::vector<int> reachable_after(const Graph& g, const std::vector<int>& sources,
                                 const std::vector<int>& cut);

// Deletability mask with exactly the given vertices blocked.
std::vector<char> all_deletable_except(int n, const std::vector<int>& blocked);

} // namespace cutkit

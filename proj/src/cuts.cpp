#include "cutkit/cuts.hpp"

#include <algorithm>
#include <deque>

namespace cutkit {

namespace {

struct FlowNet {
    struct Edge {
        int to;
        int cap;
    };
    std::vector<Edge> edges; // paired: edge i and i^1 are reverses
    std::vector<std::vector<int>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add(int from, int to, int cap) {
        adj[from].push_back((int)edges.size());
        edges.push_back({to, cap});
        adj[to].push_back((int)edges.size());
        edges.push_back({from, 0});
    }

    // BFS augmenting path; returns bottleneck or 0.
    int augment(int s, int t) {
        std::vector<int> pred(adj.size(), -1);
        std::deque<int> queue{s};
        pred[s] = -2;
        while (!queue.empty() && pred[t] == -1) {
            int u = queue.front();
            queue.pop_front();
            for (int ei : adj[u]) {
                if (edges[ei].cap > 0 && pred[edges[ei].to] == -1) {
                    pred[edges[ei].to] = ei;
                    queue.push_back(edges[ei].to);
                }
            }
        }
        if (pred[t] == -1) return 0;
        int bottleneck = INT32_MAX;
        for (int v = t; v != s;) {
            int ei = pred[v];
            bottleneck = std::min(bottleneck, edges[ei].cap);
            v = edges[ei ^ 1].to;
        }
        for (int v = t; v != s;) {
            int ei = pred[v];
            edges[ei].cap -= bottleneck;
            edges[ei ^ 1].cap += bottleneck;
            v = edges[ei ^ 1].to;
        }
        return bottleneck;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int ei : adj[u])
                if (edges[ei].cap > 0 && !seen[edges[ei].to]) {
                    seen[edges[ei].to] = 1;
                    queue.push_back(edges[ei].to);
                }
        }
        return seen;
    }
};

} // namespace

std::vector<char> all_deletable_except(int n, const std::vector<int>& blocked) {
    std::vector<char> d(n, 1);
    for (int v : blocked) d[v] = 0;
    return d;
}

CutResult min_vertex_cut(const Graph& g, const CutQuery& q) {
    const int n = g.n();
    std::vector<char> deletable = q.deletable.empty() ? std::vector<char>(n, 1) : q.deletable;
    if ((int)deletable.size() != n) throw ContractError("deletable mask size mismatch");
    for (int v : q.sources) g.check_vertex(v);
    for (int v : q.sinks) g.check_vertex(v);

    const int inf = n + 1;
    // v_in = 2v, v_out = 2v+1; source = 2n, sink = 2n+1.
    FlowNet net(2 * n + 2);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, deletable[v] ? 1 : inf);
    for (auto [u, v] : g.arcs)
        if (u != v) net.add(2 * u + 1, 2 * v, inf);
    for (int s : q.sources) net.add(2 * n, 2 * s, inf);
    for (int t : q.sinks) net.add(2 * t + 1, 2 * n + 1, inf);

    CutResult res;
    int flow = 0;
    while (true) {
        int aug = net.augment(2 * n, 2 * n + 1);
        if (aug == 0) break;
        flow += aug;
        if (flow > n) {
            res.cuttable = false;
            res.flow_value = flow;
            return res;
        }
    }
    res.flow_value = flow;
    std::vector<char> reach = net.residual_reachable(2 * n);
    for (int v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) res.cut.push_back(v);
    return res;
}

CutResult closest_cut(const Graph& g, const std::vector<int>& sources,
                      const std::vector<int>& x, const std::vector<char>& deletable) {
    CutQuery q(sources, x);
    q.deletable = deletable;
    return min_vertex_cut(g, q);
}

std::vector<int> reachable_after(const Graph& g, const std::vector<int>& sources,
                                 const std::vector<int>& cut) {
    std::vector<char> removed(g.n(), 0);
    for (int v : cut) {
        g.check_vertex(v);
        removed[v] = 1;
    }
    std::vector<char> seen(g.n(), 0);
    std::deque<int> queue;
    for (int s : sources) {
        g.check_vertex(s);
        if (!removed[s] && !seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    }
    auto adj = g.out_adj();
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
            if (!removed[v] && !seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

} // namespace cutkit

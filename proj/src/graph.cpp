#include "cutkit/graph.hpp"

#include <algorithm>
#include <deque>

namespace cutkit {

int Graph::add_vertex(std::string label) {
    labels.push_back(std::move(label));
    return (int)labels.size() - 1;
}

void Graph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    arcs.emplace_back(u, v);
}

void Graph::add_edge(int u, int v) {
    add_arc(u, v);
    if (u != v) arcs.emplace_back(v, u);
}

bool Graph::has_arc(int u, int v) const {
    return std::find(arcs.begin(), arcs.end(), std::make_pair(u, v)) != arcs.end();
}

std::vector<std::vector<int>> Graph::out_adj() const {
    std::vector<std::vector<int>> adj(labels.size());
    for (auto [u, v] : arcs)
        if (u != v) adj[u].push_back(v);
    return adj;
}

std::vector<std::vector<int>> Graph::in_adj() const {
    std::vector<std::vector<int>> adj(labels.size());
    for (auto [u, v] : arcs)
        if (u != v) adj[v].push_back(u);
    return adj;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto [a, b] : arcs) {
        if (a == v && b != v) out.push_back(b);
        if (b == v && a != v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Graph::index_of_label(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n()) throw ContractError("vertex id out of range");
}

void Graph::normalize() {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

Graph reverse(const Graph& g) {
    Graph r = g;
    for (auto& [u, v] : r.arcs) std::swap(u, v);
    r.normalize();
    return r;
}

std::vector<int> reachable_from(const Graph& g, const std::vector<int>& sources) {
    std::vector<char> seen(g.n(), 0);
    std::deque<int> queue;
    for (int s : sources) {
        g.check_vertex(s);
        if (!seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    }
    auto adj = g.out_adj();
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

Graph add_sink_only_copies(const Graph& g, const std::vector<int>& x,
                           std::vector<int>* copy_ids) {
    Graph h = g;
    if (copy_ids) copy_ids->clear();
    for (int v : x) {
        g.check_vertex(v);
        int c = h.add_vertex(g.labels[v] + "'");
        if (copy_ids) copy_ids->push_back(c);
        for (auto [a, b] : g.arcs)
            if (b == v && a != v) h.arcs.emplace_back(a, c);
    }
    h.normalize();
    return h;
}

Graph add_source_copies(const Graph& g, const std::vector<int>& x,
                        std::vector<int>* copy_ids) {
    Graph h = g;
    if (copy_ids) copy_ids->clear();
    for (int v : x) {
        g.check_vertex(v);
        int c = h.add_vertex(g.labels[v] + "-");
        if (copy_ids) copy_ids->push_back(c);
        for (auto [a, b] : g.arcs)
            if (a == v && b != v) h.arcs.emplace_back(c, b);
    }
    h.normalize();
    return h;
}

Graph add_private_sources(const Graph& g, const std::vector<int>& x,
                          std::vector<int>* copy_ids) {
    Graph h = g;
    if (copy_ids) copy_ids->clear();
    for (int v : x) {
        g.check_vertex(v);
        int c = h.add_vertex(g.labels[v] + "-");
        if (copy_ids) copy_ids->push_back(c);
        h.arcs.emplace_back(c, v);
    }
    h.normalize();
    return h;
}

Graph bypass_vertex(const Graph& g, int v, std::vector<int>* old_to_new) {
    g.check_vertex(v);
    std::vector<int> remap(g.n());
    Graph h(g.directed);
    for (int u = 0; u < g.n(); ++u)
        remap[u] = (u == v) ? -1 : h.add_vertex(g.labels[u]);

    for (auto [a, b] : g.arcs)
        if (a != v && b != v) h.arcs.emplace_back(remap[a], remap[b]);

    std::vector<int> ins, outs;
    for (auto [a, b] : g.arcs) {
        if (b == v && a != v) ins.push_back(a);
        if (a == v && b != v) outs.push_back(b);
    }
    for (int a : ins)
        for (int b : outs)
            if (a != b) h.arcs.emplace_back(remap[a], remap[b]);

    h.normalize();
    if (old_to_new) *old_to_new = remap;
    return h;
}

Graph make_heavy(const Graph& g, int v, int k, std::vector<int>* twin_ids) {
    g.check_vertex(v);
    Graph h = g;
    std::vector<int> twins{v};
    std::vector<int> nb = g.neighbors(v);
    for (int i = 1; i <= k; ++i) {
        int c = h.add_vertex(g.labels[v] + "(" + std::to_string(i) + ")");
        twins.push_back(c);
        for (int u : nb) {
            if (g.has_arc(u, v)) h.arcs.emplace_back(u, c);
            if (g.has_arc(v, u)) h.arcs.emplace_back(c, u);
        }
    }
    for (std::size_t i = 0; i < twins.size(); ++i)
        for (std::size_t j = i + 1; j < twins.size(); ++j) {
            h.arcs.emplace_back(twins[i], twins[j]);
            h.arcs.emplace_back(twins[j], twins[i]);
        }
    h.normalize();
    if (twin_ids) *twin_ids = twins;
    return h;
}

} // namespace cutkit

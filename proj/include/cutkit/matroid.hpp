#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cutkit/field.hpp"
#include "cutkit/graph.hpp"
#include "cutkit/rng.hpp"

namespace cutkit {

struct MatroidBlock {
    std::size_t col_begin = 0, col_end = 0;
    std::size_t row_begin = 0, row_end = 0;
};

// A matroid given by a representation matrix with full row rank: one column
// per ground element, rank() many rows. Independence questions reduce to
// column rank. failure_bound accumulates an upper bound on the probability
// that a randomized construction misrepresents the intended matroid.
struct RepresentedMatroid {
    FMatrix mat;
    std::vector<std::string> ground;
    std::vector<MatroidBlock> blocks; // nonempty exactly when built by direct_sum
    long double failure_bound = 0.0L;

    std::size_t rank() const { return mat.rows; }
    std::size_t size() const { return ground.size(); }

    std::size_t index_of(const std::string& label) const;
    std::size_t rank_of(std::span<const std::size_t> cols) const;
    // Duplicated indices count as dependent (multiset reading).
    bool is_independent_indices(std::span<const std::size_t> cols) const;
    bool is_independent(const std::vector<std::string>& labels) const;
};

// Vandermonde representation on evaluation points 1..n; requires prime > n.
RepresentedMatroid uniform_matroid(std::size_t n, std::size_t r, const FieldConfig& cfg);

// Left-to-right adjacency of a bipartite graph; ground set is the left side.
struct BipartiteAdj {
    std::size_t right_size = 0;
    std::vector<std::vector<std::size_t>> left_adj;

    std::size_t left_size() const { return left_adj.size(); }
    std::size_t max_matching() const;
};

// Random representation of the transversal matroid: a fresh nonzero field
// element at every adjacency position. Wrong only with probability at most
// cols * 2^cols / (prime - 1); rank degeneracies below the structural value
// are redrawn up to 3 times.
RepresentedMatroid transversal_random(const BipartiteAdj& bip, u64 prime, Rng& rng,
                                      std::vector<std::string> ground_labels = {});

// Dual on the same ground: bases are exactly complements of bases.
RepresentedMatroid dual(const RepresentedMatroid& m);

// Gammoid of (D, S): ground V(D), a set is independent iff it is linked to S
// by vertex-disjoint paths (paths of length zero included). Built through the
// transversal-matroid duality; the arc-orientation convention of the
// auxiliary bipartite graph is fixed once per process by a self-test against
// a flow oracle.
RepresentedMatroid gammoid(const Graph& d, const std::vector<int>& sources, u64 prime,
                           Rng& rng);

// Block-diagonal sum. Ground labels get the given per-layer suffixes
// (defaults to "(0)", "(1)", ... when there is more than one part).
RepresentedMatroid direct_sum(std::span<const RepresentedMatroid> parts,
                              const std::vector<std::string>& suffixes = {});

// Multiplies by a random r x rank matrix; independent sets become exactly the
// independent sets of size <= r.
RepresentedMatroid truncate(const RepresentedMatroid& m, std::size_t r, Rng& rng);

// Restriction to a subset of columns (ground order preserved as listed).
RepresentedMatroid restrict_to_columns(const RepresentedMatroid& m,
                                       std::span<const std::size_t> cols);

// Text export: "matroid <rank> <n> <prime>", one label line per ground
// element, then rank rows of n decimal entries.
std::string export_matroid(const RepresentedMatroid& m);
RepresentedMatroid parse_matroid(const std::string& text);

} // namespace cutkit

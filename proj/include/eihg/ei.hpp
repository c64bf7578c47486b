#pragma once

#include <cstddef>

#include "eihg/hypergraph.hpp"

namespace eihg {

/// Edge intersection hypergraph: same vertex set, one edge for every
/// intersection of two distinct edges that keeps at least two vertices.
Hypergraph ei(const Hypergraph& h);

/// k-fold application of `ei`; `k == 0` returns `h` unchanged.
Hypergraph ei_iterate(const Hypergraph& h, std::size_t k);

/// Smallest k for which `ei_iterate(h, k)` has no edges.
std::size_t ei_number(const Hypergraph& h);

/// Necessary condition for `h` to be the EI of some hypergraph: every pair of
/// incomparable edges sharing at least two vertices has a third edge covering
/// their intersection.
bool satisfies_necessary_condition(const Hypergraph& h);

/// Adds the full vertex set as an edge to a linear hypergraph. The result's
/// EI is `h` again; this is checked before returning.
Hypergraph augment_linear(const Hypergraph& h);

}  // namespace eihg

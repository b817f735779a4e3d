#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "fp2/syntax.hpp"

namespace fp2 {

/// One edge per (rule, body literal) occurrence, so parallel edges with
/// different signs or origins are preserved.
struct DepEdge {
  Predicate from;
  Predicate to;
  bool negative = false;
  std::size_t rule_index = 0;
  std::size_t body_position = 0;

  friend auto operator<=>(const DepEdge&, const DepEdge&) = default;
};

/// The predicate dependency graph. Vertices are the predicates occurring in
/// the program; the built-in `=` is excluded.
struct PredGraph {
  std::set<Predicate> vertices;
  std::vector<DepEdge> edges;
};

PredGraph build_pred_graph(const Program& p);

/// Strongly connected components, callees before callers. Component members
/// are sorted; singleton vertices form their own components.
struct SccPartition {
  std::vector<std::vector<Predicate>> components;
  std::map<Predicate, std::size_t> component_of;

  bool same_component(const Predicate& a, const Predicate& b) const {
    auto ia = component_of.find(a);
    auto ib = component_of.find(b);
    return ia != component_of.end() && ib != component_of.end() &&
           ia->second == ib->second;
  }
};

SccPartition sccs(const PredGraph& g);

/// True iff the subgraph of `component`, minus the edges whose index is in
/// `excluded_edges`, contains a cycle with an odd number of negative edges.
/// Decided on the parity product: each vertex is duplicated with a parity
/// bit, edge (u,v,s) connects (u,b) to (v, b xor [s is negative]), and an odd
/// cycle exists iff (v,0) and (v,1) share a product component for some v.
/// Throws std::invalid_argument when `component` is not an SCC of `g`.
bool component_has_odd_cycle(const PredGraph& g,
                             const std::vector<Predicate>& component,
                             const std::set<std::size_t>& excluded_edges);

}  // namespace fp2

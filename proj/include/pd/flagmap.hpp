#pragma once

#include <cstdint>
#include <vector>

#include "pd/rotation.hpp"

namespace pd {

/// Subset of edges as a bitmask over edge ids 0..e-1.
using EdgeMask = std::uint64_t;

inline EdgeMask full_mask(int edges) {
    return edges == 0 ? 0 : (~EdgeMask{0} >> (64 - edges));
}

/// Ribbon graph encoded by four flags per edge and three fixed-point-free
/// involutions on flags:
///   a0 traverses the edge to the other end (crossing sides for an untwisted
///      edge, keeping sides for a twisted one),
///   a1 rotates across a vertex corner to the next slot,
///   a2 flips side within a half-edge slot.
/// Orbits: vertices <a1,a2>, edges <a0,a2>, faces <a0,a1>, components
/// <a0,a1,a2>. Zero-degree vertices carry no flags and are held as a count.
/// Immutable after build; partial_dual and restrict_edges return new values.
struct FlagMap {
    std::vector<int> a0, a1, a2;
    std::vector<int> edge_of;
    int isolated_vertices = 0;

    int flags() const { return static_cast<int>(a0.size()); }
    int edges() const { return flags() / 4; }
};

struct MapCounts {
    int v = 0, e = 0, f = 0, c = 0;
    bool operator==(const MapCounts&) const = default;
};

/// Validates and assembles a FlagMap. Throws NotInvolution, FixedPoint,
/// BadEdgeOrbit (an <a0,a2> orbit of size != 4, non-constant edge_of on an
/// orbit, or edge ids that are not exactly 0..e-1).
FlagMap build(std::vector<int> a0, std::vector<int> a1, std::vector<int> a2,
              std::vector<int> edge_of, int isolated_vertices = 0);

MapCounts counts(const FlagMap& m);

/// Sum over connected components of 2 - (v - e + f); isolated vertices are
/// sphere components contributing 0.
int euler_genus(const FlagMap& m);

/// True iff the flag graph whose edges are all involution pairs is bipartite
/// on every component.
bool orientable(const FlagMap& m);

/// euler_genus / 2; throws NonOrientable on non-orientable input.
int genus(const FlagMap& m);

/// Dualizes along the edges in `subset` by swapping the a0/a2 action on their
/// flags. An involution: applying the same subset twice restores the map.
/// Throws MaskOutOfRange if the mask has bits at or above the edge count.
FlagMap partial_dual(const FlagMap& m, EdgeMask subset);

FlagMap to_map(const RotationSystem& r);
FlagMap to_map(const SignedRotation& r);

/// Map of the spanning sub-ribbon-graph: all vertices kept, edges outside
/// `keep` deleted from the cyclic orders. Bits at or above the edge count are
/// ignored. Vertices left with no slots count as isolated.
FlagMap restrict_edges(const RotationSystem& r, EdgeMask keep);

/// Recovers a rotation system whose rebuilt map admits a flag bijection to m
/// commuting with all three involutions. Vertex orientations are chosen so
/// that a spanning tree of each component comes out untwisted; output is
/// deterministic (vertices in discovery order from the lowest flag, edges
/// labelled a, b, c, ... by first appearance).
RotationSystem extract_rotation(const FlagMap& m);

} // namespace pd

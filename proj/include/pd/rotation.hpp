#pragma once

#include <string>
#include <vector>

#include "pd/errors.hpp"

namespace pd {

/// One-vertex ribbon graph given by the cyclic order of its 2n half-edges.
/// Edge ids are dense and numbered by first occurrence along the sequence;
/// a twisted edge carries its '-' on the second occurrence when printed.
struct SignedRotation {
    std::vector<int> seq;            // 2n entries: edge id at each cyclic position
    std::vector<char> twisted;       // per edge id
    std::vector<std::string> labels; // per edge id

    int edges() const { return static_cast<int>(twisted.size()); }
    int positions() const { return static_cast<int>(seq.size()); }
    bool empty() const { return seq.empty(); }

    /// "(a, b, -a, c)" style; '-' goes on the second occurrence of twisted edges.
    std::string str() const;

    bool operator==(const SignedRotation&) const = default;
};

/// Multi-vertex rotation system: per-vertex cyclic slot orders. An edge is
/// twisted iff exactly one of its two slots is marked. Vertices may be empty
/// (isolated). The single-vertex case is a SignedRotation.
struct RotationSystem {
    struct Slot {
        int edge;
        bool mark;
        bool operator==(const Slot&) const = default;
    };
    std::vector<std::vector<Slot>> vertices;
    std::vector<char> twisted;       // per edge id
    std::vector<std::string> labels; // per edge id

    int edges() const { return static_cast<int>(twisted.size()); }

    /// One "v<i>: tok tok ..." line per vertex; marked slots print a '-' prefix.
    std::string str() const;
};

/// Accepts the parenthesized comma-separated notation, e.g. "(a, b, -a, c, b,
/// -c, d, d)". Whitespace and the outer parentheses are optional; a label is
/// any token not starting with '-'. Empty input is the empty bouquet.
/// Throws LabelCountNotTwo, DoubleNegative, BadToken.
SignedRotation parse_rotation(const std::string& text);

/// Parses the multi-vertex file format: one line per vertex, "v<i>: tok tok
/// ...", token '-'-prefixed when the slot is marked. Blank lines are ignored;
/// a line with no tokens after ':' is an isolated vertex.
RotationSystem parse_rotation_system(const std::string& text);

RotationSystem as_system(const SignedRotation& r);

/// Inverse of as_system for single-vertex systems (isolated vertices are not
/// representable in a SignedRotation and are rejected).
SignedRotation as_bouquet(const RotationSystem& rs);

/// Edge id for a label; throws NoSuchEdge.
int find_edge(const SignedRotation& r, const std::string& label);

/// Rebuilds a SignedRotation from a position sequence of old edge ids,
/// renumbering densely by first occurrence and carrying twists/labels over.
SignedRotation reindex(const std::vector<int>& seq,
                       const std::vector<char>& old_twisted,
                       const std::vector<std::string>& old_labels);

} // namespace pd

#pragma once

#include <string>
#include <vector>

#include "pd/rotation.hpp"

namespace pd {

/// Sorted signed interlace numbers of a bouquet. An entry is (alpha, twisted)
/// rather than a signed integer so that a twisted trivial loop renders as
/// "-0" and sorts strictly before the untwisted "0".
struct SignedSequence {
    struct Entry {
        int alpha;
        bool twisted;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    bool operator==(const SignedSequence&) const = default;
    bool operator<(const SignedSequence& o) const;

    /// "(-4, -1, -0, 0, 1, 2, 2, 2, 3, 5)"
    std::string str() const;
};

/// alpha per edge id: the number of edges whose two occurrences alternate
/// with the edge's own around the vertex.
std::vector<int> interlace_numbers(const SignedRotation& r);

SignedSequence signed_sequence(const SignedRotation& r);

struct StripResult {
    int twisted_removed = 0;   // trivial twisted loops (beta = -0)
    int untwisted_removed = 0; // trivial untwisted loops (beta = 0)
    SignedRotation reduced;
};

/// Removes trivial loops (alpha = 0) until none remain.
StripResult strip_trivial(const SignedRotation& r);

/// One-point join: the two rotations concatenated as one cyclic order.
/// Clashing labels from q are decorated with primes. The empty bouquet is the
/// identity.
SignedRotation join(const SignedRotation& p, const SignedRotation& q);

/// Splits along cyclic arcs closed under occurrence pairing until every part
/// is prime. The input is an iterated one-point join of the returned factors,
/// so its genus polynomial is the product of theirs (the arrangement of the
/// join is not recoverable from the factor list alone).
std::vector<SignedRotation> factor(const SignedRotation& r);

/// True iff r is non-empty and admits no proper decomposition.
bool is_prime(const SignedRotation& r);

SignedRotation delete_edge(const SignedRotation& r, int edge);
SignedRotation delete_edge(const SignedRotation& r, const std::string& label);

/// Lexicographic minimum over the orbit of r under cyclic rotation,
/// reversal, relabeling by first occurrence, and sign-placement
/// normalization; edges are renamed a, b, c, ...
SignedRotation canonical_rotation(const SignedRotation& r);
std::string canonical(const SignedRotation& r);

/// Bouquet equality as ribbon graphs: equal canonical forms.
bool iso(const SignedRotation& a, const SignedRotation& b);

} // namespace pd

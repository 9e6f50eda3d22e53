#pragma once

#include "pd/flagmap.hpp"
#include "pd/poly.hpp"
#include "pd/rotation.hpp"

namespace pd {

/// Hard cap on direct enumeration: bitmask width and runtime sanity.
inline constexpr int kMaxDirectEdges = 62;

/// Sum of z^{euler_genus(G^A)} over all 2^e subsets A, by involution surgery
/// on the flag map. Threads shard the mask range; the histogram merge is
/// order-independent, so the result is identical for any thread count.
/// Throws CapExceeded above kMaxDirectEdges edges.
Poly pde_direct(const RotationSystem& r, int threads = 1);
Poly pde_direct(const SignedRotation& r, int threads = 1);

/// Bouquet fast path: strips trivial loops (prefactor 2^{i+j} z^i), factors
/// into primes, and sums z^{eps(A) + eps(A^c)} per prime factor over its
/// spanning sub-ribbon-graphs. Always equals pde_direct on the same input.
Poly pde_bouquet(const SignedRotation& r);

/// Partial-dual orientable genus polynomial: pde with exponents halved.
/// Throws NonOrientable on non-orientable input.
Poly pdg(const RotationSystem& r, int threads = 1);
Poly pdg(const SignedRotation& r, int threads = 1);

/// True iff the pde polynomial of G^A, recomputed from an extracted rotation
/// system of the dual, equals that of G.
bool check_invariance(const RotationSystem& r, EdgeMask subset);
bool check_invariance(const SignedRotation& r, EdgeMask subset);

} // namespace pd

#include "pd/pdengine.hpp"

#include <cstdint>
#include <thread>

#include "pd/bouquet.hpp"

namespace pd {

namespace {

// per-degree subset counts; degree <= euler genus bound of e edges
using Histogram = std::vector<std::uint64_t>;

void accumulate_range(const FlagMap& base, EdgeMask lo, EdgeMask hi, Histogram& hist) {
    for (EdgeMask mask = lo; mask < hi; ++mask) {
        int eps = euler_genus(partial_dual(base, mask));
        if (static_cast<size_t>(eps) >= hist.size()) hist.resize(eps + 1, 0);
        ++hist[eps];
    }
}

Poly hist_to_poly(const Histogram& hist) {
    Poly p;
    for (size_t d = 0; d < hist.size(); ++d)
        if (hist[d]) p.add_term(static_cast<unsigned>(d), BigInt(hist[d]));
    return p;
}

} // namespace

Poly pde_direct(const RotationSystem& r, int threads) {
    if (r.edges() > kMaxDirectEdges)
        throw CapExceeded("direct enumeration is limited to " +
                          std::to_string(kMaxDirectEdges) + " edges, got " +
                          std::to_string(r.edges()));
    const FlagMap base = to_map(r);
    const EdgeMask total = EdgeMask{1} << r.edges();
    if (threads < 1) threads = 1;
    if (static_cast<EdgeMask>(threads) > total) threads = static_cast<int>(total);
    if (threads == 1) {
        Histogram hist;
        accumulate_range(base, 0, total, hist);
        return hist_to_poly(hist);
    }
    std::vector<Histogram> parts(threads);
    std::vector<std::thread> workers;
    const EdgeMask chunk = total / threads;
    for (int t = 0; t < threads; ++t) {
        EdgeMask lo = chunk * t;
        EdgeMask hi = (t + 1 == threads) ? total : lo + chunk;
        workers.emplace_back(
            [&base, lo, hi, &part = parts[t]] { accumulate_range(base, lo, hi, part); });
    }
    for (auto& w : workers) w.join();
    Histogram hist;
    for (const auto& part : parts) {
        if (part.size() > hist.size()) hist.resize(part.size(), 0);
        for (size_t d = 0; d < part.size(); ++d) hist[d] += part[d];
    }
    return hist_to_poly(hist);
}

Poly pde_direct(const SignedRotation& r, int threads) {
    return pde_direct(as_system(r), threads);
}

namespace {

// eps(G^A) = eps(A) + eps(A^c) for bouquets, with eps from spanning
// sub-ribbon-graphs
Poly pde_prime_bouquet(const SignedRotation& b) {
    if (b.edges() > kMaxDirectEdges)
        throw CapExceeded("bouquet enumeration is limited to " +
                          std::to_string(kMaxDirectEdges) + " edges, got " +
                          std::to_string(b.edges()));
    const RotationSystem sys = as_system(b);
    const EdgeMask full = full_mask(b.edges());
    Histogram hist;
    for (EdgeMask mask = 0;; ++mask) {
        int eps = euler_genus(restrict_edges(sys, mask)) +
                  euler_genus(restrict_edges(sys, ~mask & full));
        if (static_cast<size_t>(eps) >= hist.size()) hist.resize(eps + 1, 0);
        ++hist[eps];
        if (mask == full) break;
    }
    return hist_to_poly(hist);
}

} // namespace

Poly pde_bouquet(const SignedRotation& r) {
    auto stripped = strip_trivial(r);
    const int i = stripped.twisted_removed;
    const int j = stripped.untwisted_removed;
    Poly acc = Poly::term(static_cast<unsigned>(i), BigInt(1) << (i + j));
    for (const auto& piece : factor(stripped.reduced)) acc = acc * pde_prime_bouquet(piece);
    return acc;
}

Poly pdg(const RotationSystem& r, int threads) {
    if (!orientable(to_map(r))) throw NonOrientable("pdg of a non-orientable ribbon graph");
    return pde_direct(r, threads).halve_exponents();
}

Poly pdg(const SignedRotation& r, int threads) { return pdg(as_system(r), threads); }

bool check_invariance(const RotationSystem& r, EdgeMask subset) {
    const Poly lhs = pde_direct(r);
    const RotationSystem dual = extract_rotation(partial_dual(to_map(r), subset));
    return lhs == pde_direct(dual);
}

bool check_invariance(const SignedRotation& r, EdgeMask subset) {
    return check_invariance(as_system(r), subset);
}

} // namespace pd

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pd/bouquet.hpp"
#include "pd/pdengine.hpp"

namespace pd {

/// One isomorphism class of bouquets, keyed by its canonical rotation.
struct BouquetClass {
    SignedRotation rotation; // canonical representative
    std::string key;         // canonical string
    SignedSequence sequence;
    bool prime = false;
    bool orientable = false;
    Poly pde;
    std::optional<Poly> pdg; // set iff orientable
};

struct EnumerateOptions {
    bool orientable_only = false;
    bool prime_only = false;
    int cap = 6;
    bool with_polynomials = true;
};

/// Isomorph-free enumeration of all bouquets with exactly n edges: all
/// perfect matchings of 2n positions, crossed with twist assignments (only
/// all-untwisted when orientable_only), deduplicated by canonical form.
/// Deterministic order by canonical string. Throws CapExceeded for n beyond
/// the cap.
std::vector<BouquetClass> enumerate_bouquets(int n, const EnumerateOptions& opts = {});

/// The bouquet (1, 2, ..., t, 1, 2, ..., t), untwisted.
SignedRotation theta(int t);

/// Orientable genus of theta(t): (t-1)/2 for odd t, t/2 for even t.
int theta_genus_closed_form(int t);

/// Closed form of the pDg-polynomial of theta(t):
///   2^t z^{(t-1)/2}                     for odd t,
///   2^{t-1} z^{t/2} + 2^{t-1} z^{(t-2)/2} for even t (1 for t = 0).
Poly theta_closed_form(int t);

/// Brute-force pdg(theta(t)) against the closed form.
bool check_theta_formula(int t);

/// Orientable classes with <= max_edges edges whose pDg-polynomial is a
/// single non-constant term.
std::vector<BouquetClass> search_conjecture_31(int max_edges, int cap = 6);

/// Non-orientable classes with <= max_edges edges whose pDe-polynomial is
/// not interpolating.
std::vector<BouquetClass> search_conjecture_53(int max_edges, int cap = 6);

/// Classes sharing a signed sequence but disagreeing elsewhere.
struct SequenceGroupViolation {
    int edge_count = 0;
    std::string sequence;
    std::vector<std::pair<std::string, std::string>> members; // (key, polynomial or "")
};

struct ClassificationReport {
    int n_all = 0;
    int n_orientable = 0;
    std::vector<int> prime_counts;            // all twists, e = 1..n_all
    std::vector<int> orientable_prime_counts; // e = 1..n_orientable
    std::vector<SequenceGroupViolation> prime_sequence_collisions; // distinct prime classes, equal sequence
    std::vector<SequenceGroupViolation> orientable_prime_sequence_collisions;
    std::vector<SequenceGroupViolation> pde_mismatches; // all classes e <= n_all
    std::vector<SequenceGroupViolation> pdg_mismatches; // orientable classes e <= n_orientable

    bool sequences_determine_prime_classes() const {
        return prime_sequence_collisions.empty() && orientable_prime_sequence_collisions.empty();
    }
    std::string text() const;
};

/// Checks how far the signed sequence determines bouquets and their
/// polynomials: prime-class identification up to n_all edges (n_orientable
/// when restricted to orientable bouquets), and equal sequences implying
/// equal pde (all classes, e <= n_all) resp. pdg (orientable classes,
/// e <= n_orientable). Larger sizes report the violations found.
ClassificationReport verify_classification(int n_all, int n_orientable, int cap = 6);

} // namespace pd

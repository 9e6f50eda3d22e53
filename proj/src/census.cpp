#include "pd/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

namespace pd {

namespace {

void matchings(std::vector<int>& partner, int N,
               const std::function<void(const std::vector<int>&)>& out) {
    int a = -1;
    for (int i = 0; i < N; ++i)
        if (partner[i] < 0) {
            a = i;
            break;
        }
    if (a < 0) {
        out(partner);
        return;
    }
    for (int b = a + 1; b < N; ++b) {
        if (partner[b] >= 0) continue;
        partner[a] = b;
        partner[b] = a;
        matchings(partner, N, out);
        partner[a] = -1;
        partner[b] = -1;
    }
}

SignedRotation rotation_from_matching(const std::vector<int>& partner, EdgeMask twists) {
    const int N = static_cast<int>(partner.size());
    SignedRotation r;
    std::vector<int> id(N, -1);
    for (int i = 0; i < N; ++i) {
        if (id[i] < 0) {
            int e = r.edges();
            id[i] = id[partner[i]] = e;
            r.twisted.push_back((twists >> e) & 1 ? 1 : 0);
            r.labels.push_back(e < 26 ? std::string(1, static_cast<char>('a' + e))
                                      : "e" + std::to_string(e));
        }
        r.seq.push_back(id[i]);
    }
    return r;
}

BouquetClass make_class(SignedRotation canon, std::string key, bool with_polynomials) {
    BouquetClass c;
    c.sequence = signed_sequence(canon);
    c.prime = is_prime(canon);
    c.orientable = true;
    for (char t : canon.twisted)
        if (t) c.orientable = false;
    if (with_polynomials) {
        c.pde = pde_direct(canon);
        if (c.orientable) c.pdg = c.pde.halve_exponents();
    }
    c.rotation = std::move(canon);
    c.key = std::move(key);
    return c;
}

} // namespace

std::vector<BouquetClass> enumerate_bouquets(int n, const EnumerateOptions& opts) {
    if (n < 0 || n > opts.cap)
        throw CapExceeded("edge count " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(opts.cap));
    std::map<std::string, SignedRotation> reps;
    std::vector<int> partner(2 * n, -1);
    const EdgeMask twist_end = opts.orientable_only ? 1 : (EdgeMask{1} << n);
    matchings(partner, 2 * n, [&](const std::vector<int>& pairing) {
        for (EdgeMask twists = 0; twists < twist_end; ++twists) {
            auto canon = canonical_rotation(rotation_from_matching(pairing, twists));
            std::string key = canon.str();
            reps.try_emplace(std::move(key), std::move(canon));
        }
    });
    std::vector<BouquetClass> out;
    for (auto& [key, rot] : reps) {
        if (opts.prime_only && !is_prime(rot)) continue;
        out.push_back(make_class(std::move(rot), key, opts.with_polynomials));
    }
    return out;
}

SignedRotation theta(int t) {
    SignedRotation r;
    for (int i = 0; i < t; ++i) {
        r.twisted.push_back(0);
        r.labels.push_back(std::to_string(i + 1));
    }
    for (int rep = 0; rep < 2; ++rep)
        for (int i = 0; i < t; ++i) r.seq.push_back(i);
    return r;
}

int theta_genus_closed_form(int t) { return t % 2 ? (t - 1) / 2 : t / 2; }

Poly theta_closed_form(int t) {
    if (t == 0) return Poly::constant(1);
    if (t % 2) return Poly::term(static_cast<unsigned>((t - 1) / 2), BigInt(1) << t);
    Poly p = Poly::term(static_cast<unsigned>(t / 2), BigInt(1) << (t - 1));
    p += Poly::term(static_cast<unsigned>((t - 2) / 2), BigInt(1) << (t - 1));
    return p;
}

bool check_theta_formula(int t) { return pdg(theta(t)) == theta_closed_form(t); }

std::vector<BouquetClass> search_conjecture_31(int max_edges, int cap) {
    std::vector<BouquetClass> hits;
    for (int e = 1; e <= max_edges; ++e) {
        EnumerateOptions opts;
        opts.orientable_only = true;
        opts.cap = cap;
        for (auto& c : enumerate_bouquets(e, opts))
            if (c.pdg && c.pdg->is_singleton_nonconstant()) hits.push_back(std::move(c));
    }
    return hits;
}

std::vector<BouquetClass> search_conjecture_53(int max_edges, int cap) {
    std::vector<BouquetClass> hits;
    for (int e = 1; e <= max_edges; ++e) {
        EnumerateOptions opts;
        opts.cap = cap;
        for (auto& c : enumerate_bouquets(e, opts))
            if (!c.orientable && !c.pde.is_interpolating()) hits.push_back(std::move(c));
    }
    return hits;
}

namespace {

// groups classes by signed sequence and records groups whose projection
// (canonical key, or polynomial) is not constant
std::vector<SequenceGroupViolation> sequence_violations(
    const std::vector<const BouquetClass*>& classes, int edge_count,
    const std::function<std::string(const BouquetClass&)>& value) {
    std::map<std::string, std::vector<const BouquetClass*>> by_seq;
    for (const auto* c : classes) by_seq[c->sequence.str()].push_back(c);
    std::vector<SequenceGroupViolation> out;
    for (auto& [seq, group] : by_seq) {
        if (group.size() < 2) continue;
        bool all_equal = true;
        for (size_t i = 1; i < group.size(); ++i)
            if (value(*group[i]) != value(*group[0])) all_equal = false;
        if (all_equal) continue;
        SequenceGroupViolation v;
        v.edge_count = edge_count;
        v.sequence = seq;
        for (const auto* c : group) v.members.emplace_back(c->key, value(*c));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

ClassificationReport verify_classification(int n_all, int n_orientable, int cap) {
    ClassificationReport rep;
    rep.n_all = n_all;
    rep.n_orientable = n_orientable;
    const int n_max = std::max(n_all, n_orientable);
    std::vector<std::vector<BouquetClass>> census(n_max + 1);
    for (int e = 1; e <= n_max; ++e) {
        EnumerateOptions opts;
        opts.cap = std::max(cap, n_max);
        census[e] = enumerate_bouquets(e, opts);
    }
    auto key_of = [](const BouquetClass& c) { return c.key; };
    auto pde_of = [](const BouquetClass& c) { return c.pde.str(); };
    auto pdg_of = [](const BouquetClass& c) { return c.pdg ? c.pdg->str() : std::string(); };

    for (int e = 1; e <= n_all; ++e) {
        std::vector<const BouquetClass*> primes, all;
        for (const auto& c : census[e]) {
            all.push_back(&c);
            if (c.prime) primes.push_back(&c);
        }
        rep.prime_counts.push_back(static_cast<int>(primes.size()));
        for (auto& v : sequence_violations(primes, e, key_of))
            rep.prime_sequence_collisions.push_back(std::move(v));
        for (auto& v : sequence_violations(all, e, pde_of))
            rep.pde_mismatches.push_back(std::move(v));
    }
    for (int e = 1; e <= n_orientable; ++e) {
        std::vector<const BouquetClass*> primes, all;
        for (const auto& c : census[e]) {
            if (!c.orientable) continue;
            all.push_back(&c);
            if (c.prime) primes.push_back(&c);
        }
        rep.orientable_prime_counts.push_back(static_cast<int>(primes.size()));
        for (auto& v : sequence_violations(primes, e, key_of))
            rep.orientable_prime_sequence_collisions.push_back(std::move(v));
        for (auto& v : sequence_violations(all, e, pdg_of))
            rep.pdg_mismatches.push_back(std::move(v));
    }
    return rep;
}

std::string ClassificationReport::text() const {
    std::ostringstream out;
    out << "prime classes per edge count (all bouquets, e = 1.." << n_all << "):";
    for (int c : prime_counts) out << " " << c;
    out << "\norientable prime classes (e = 1.." << n_orientable << "):";
    for (int c : orientable_prime_counts) out << " " << c;
    out << "\n";
    auto dump = [&](const char* what, const std::vector<SequenceGroupViolation>& vs) {
        out << what << ": " << vs.size() << "\n";
        for (const auto& v : vs) {
            out << "  e=" << v.edge_count << "  S=" << v.sequence << "\n";
            for (const auto& [key, val] : v.members)
                out << "    " << key << (val.empty() ? "" : "  ->  " + val) << "\n";
        }
    };
    dump("prime classes sharing a sequence", prime_sequence_collisions);
    dump("orientable prime classes sharing a sequence", orientable_prime_sequence_collisions);
    dump("equal sequence, different pde", pde_mismatches);
    dump("equal sequence, different pdg", pdg_mismatches);
    return out.str();
}

} // namespace pd

#include "pd/bouquet.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace pd {

namespace {

int sort_key(const SignedSequence::Entry& e) { return e.twisted ? -e.alpha : e.alpha; }

} // namespace

bool SignedSequence::operator<(const SignedSequence& o) const {
    auto proj = [](const Entry& e) { return std::pair<int, int>(sort_key(e), e.twisted ? 0 : 1); };
    return std::lexicographical_compare(
        entries.begin(), entries.end(), o.entries.begin(), o.entries.end(),
        [&](const Entry& a, const Entry& b) { return proj(a) < proj(b); });
}

std::string SignedSequence::str() const {
    std::string out = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        if (entries[i].twisted) out += "-";
        out += std::to_string(entries[i].alpha);
    }
    return out + ")";
}

std::vector<int> interlace_numbers(const SignedRotation& r) {
    const int E = r.edges();
    std::vector<int> p1(E, -1), p2(E, -1);
    for (int i = 0; i < r.positions(); ++i) {
        int e = r.seq[i];
        (p1[e] < 0 ? p1[e] : p2[e]) = i;
    }
    std::vector<int> alpha(E, 0);
    for (int e = 0; e < E; ++e) {
        for (int f = 0; f < E; ++f) {
            if (f == e) continue;
            // the occurrences alternate iff exactly one endpoint of f lies
            // strictly between the two endpoints of e
            bool in1 = p1[e] < p1[f] && p1[f] < p2[e];
            bool in2 = p1[e] < p2[f] && p2[f] < p2[e];
            if (in1 != in2) ++alpha[e];
        }
    }
    return alpha;
}

SignedSequence signed_sequence(const SignedRotation& r) {
    auto alpha = interlace_numbers(r);
    SignedSequence s;
    for (int e = 0; e < r.edges(); ++e)
        s.entries.push_back({alpha[e], r.twisted[e] != 0});
    std::sort(s.entries.begin(), s.entries.end(),
              [](const SignedSequence::Entry& a, const SignedSequence::Entry& b) {
                  if (sort_key(a) != sort_key(b)) return sort_key(a) < sort_key(b);
                  return a.twisted && !b.twisted; // -0 before 0
              });
    return s;
}

StripResult strip_trivial(const SignedRotation& r) {
    StripResult out;
    out.reduced = r;
    bool changed = true;
    while (changed) {
        changed = false;
        auto alpha = interlace_numbers(out.reduced);
        for (int e = 0; e < out.reduced.edges(); ++e) {
            if (alpha[e] != 0) continue;
            if (out.reduced.twisted[e])
                ++out.twisted_removed;
            else
                ++out.untwisted_removed;
            out.reduced = delete_edge(out.reduced, e);
            changed = true;
            break;
        }
    }
    return out;
}

SignedRotation join(const SignedRotation& p, const SignedRotation& q) {
    SignedRotation r = p;
    std::set<std::string> used(p.labels.begin(), p.labels.end());
    for (int e = 0; e < q.edges(); ++e) {
        std::string label = q.labels[e];
        while (used.count(label)) label += "'";
        used.insert(label);
        r.labels.push_back(label);
        r.twisted.push_back(q.twisted[e]);
    }
    for (int id : q.seq) r.seq.push_back(p.edges() + id);
    return r;
}

namespace {

// smallest proper cyclic arc in which every edge occurs 0 or 2 times;
// scans each start position in order
bool find_proper_closed_arc(const SignedRotation& r, int& start, int& len) {
    const int N = r.positions();
    std::vector<char> open(r.edges(), 0);
    for (int s = 0; s < N; ++s) {
        std::fill(open.begin(), open.end(), 0);
        int depth = 0;
        for (int l = 1; l <= N; ++l) {
            int e = r.seq[(s + l - 1) % N];
            if (open[e]) {
                open[e] = 0;
                --depth;
            } else {
                open[e] = 1;
                ++depth;
            }
            if (depth == 0) {
                if (l < N) {
                    start = s;
                    len = l;
                    return true;
                }
                break;
            }
        }
    }
    return false;
}

SignedRotation cyclic_slice(const SignedRotation& r, int from, int count) {
    std::vector<int> seq;
    seq.reserve(count);
    for (int i = 0; i < count; ++i) seq.push_back(r.seq[(from + i) % r.positions()]);
    return reindex(seq, r.twisted, r.labels);
}

} // namespace

bool is_prime(const SignedRotation& r) {
    int s, l;
    return !r.empty() && !find_proper_closed_arc(r, s, l);
}

std::vector<SignedRotation> factor(const SignedRotation& r) {
    if (r.empty()) return {};
    int s, l;
    if (!find_proper_closed_arc(r, s, l)) return {r};
    auto out = factor(cyclic_slice(r, s, l));
    auto rest = factor(cyclic_slice(r, s + l, r.positions() - l));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

SignedRotation delete_edge(const SignedRotation& r, int edge) {
    if (edge < 0 || edge >= r.edges())
        throw NoSuchEdge("no edge with id " + std::to_string(edge));
    std::vector<int> seq;
    for (int id : r.seq)
        if (id != edge) seq.push_back(id);
    return reindex(seq, r.twisted, r.labels);
}

SignedRotation delete_edge(const SignedRotation& r, const std::string& label) {
    return delete_edge(r, find_edge(r, label));
}

namespace {

// token stream (new id, negated) of one reading; ids by first occurrence,
// '-' lands on the second occurrence of twisted edges
std::vector<std::pair<int, char>> read_tokens(const SignedRotation& r, int start, int dir) {
    const int N = r.positions();
    std::vector<int> newid(r.edges(), -1);
    std::vector<char> seen(r.edges(), 0);
    std::vector<std::pair<int, char>> out;
    out.reserve(N);
    int next = 0;
    for (int k = 0; k < N; ++k) {
        int pos = ((start + dir * k) % N + N) % N;
        int e = r.seq[pos];
        if (newid[e] < 0) newid[e] = next++;
        out.emplace_back(newid[e], static_cast<char>(seen[e] && r.twisted[e]));
        seen[e] = 1;
    }
    return out;
}

} // namespace

SignedRotation canonical_rotation(const SignedRotation& r) {
    const int N = r.positions();
    std::vector<std::pair<int, char>> best;
    bool have = false;
    for (int dir : {1, -1}) {
        for (int start = 0; start < N; ++start) {
            auto t = read_tokens(r, start, dir);
            if (!have || t < best) {
                best = std::move(t);
                have = true;
            }
        }
    }
    SignedRotation out;
    if (!have) return out; // empty bouquet
    int edges = 0;
    for (auto& [id, neg] : best) edges = std::max(edges, id + 1);
    out.twisted.assign(edges, 0);
    for (auto& [id, neg] : best) {
        out.seq.push_back(id);
        if (neg) out.twisted[id] = 1;
    }
    for (int k = 0; k < edges; ++k)
        out.labels.push_back(k < 26 ? std::string(1, static_cast<char>('a' + k))
                                    : "e" + std::to_string(k));
    return out;
}

std::string canonical(const SignedRotation& r) { return canonical_rotation(r).str(); }

bool iso(const SignedRotation& a, const SignedRotation& b) {
    return canonical_rotation(a) == canonical_rotation(b);
}

} // namespace pd

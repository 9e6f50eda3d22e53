#include "pd/flagmap.hpp"

#include <array>
#include <deque>
#include <utility>

namespace pd {

namespace {

void check_involution(const std::vector<int>& a, const char* name) {
    const int n = static_cast<int>(a.size());
    for (int f = 0; f < n; ++f) {
        if (a[f] < 0 || a[f] >= n || a[a[f]] != f)
            throw NotInvolution(std::string(name) + " is not an involution at flag " +
                                std::to_string(f));
        if (a[f] == f)
            throw FixedPoint(std::string(name) + " fixes flag " + std::to_string(f));
    }
}

// orbit id per flag under the group generated by `gens`; returns orbit count
int orbits(int flags, std::initializer_list<const std::vector<int>*> gens,
           std::vector<int>& out) {
    out.assign(flags, -1);
    int count = 0;
    std::vector<int> stack;
    for (int f0 = 0; f0 < flags; ++f0) {
        if (out[f0] >= 0) continue;
        int id = count++;
        out[f0] = id;
        stack.push_back(f0);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (const auto* g : gens) {
                int t = (*g)[f];
                if (out[t] < 0) {
                    out[t] = id;
                    stack.push_back(t);
                }
            }
        }
    }
    return count;
}

} // namespace

FlagMap build(std::vector<int> a0, std::vector<int> a1, std::vector<int> a2,
              std::vector<int> edge_of, int isolated_vertices) {
    if (a1.size() != a0.size() || a2.size() != a0.size() || edge_of.size() != a0.size())
        throw Error("flag arrays have unequal lengths");
    const int flags = static_cast<int>(a0.size());
    if (flags % 4 != 0)
        throw BadEdgeOrbit("flag count " + std::to_string(flags) + " is not a multiple of 4");
    check_involution(a0, "a0");
    check_involution(a1, "a1");
    check_involution(a2, "a2");

    const int edges = flags / 4;
    std::vector<int> orbit;
    FlagMap m{std::move(a0), std::move(a1), std::move(a2), std::move(edge_of),
              isolated_vertices};
    int ne = orbits(flags, {&m.a0, &m.a2}, orbit);
    if (ne != edges)
        throw BadEdgeOrbit("expected " + std::to_string(edges) + " <a0,a2> orbits, found " +
                           std::to_string(ne));
    std::vector<int> size(ne, 0), eid(ne, -1);
    for (int f = 0; f < flags; ++f) {
        int o = orbit[f];
        ++size[o];
        if (eid[o] < 0)
            eid[o] = m.edge_of[f];
        else if (eid[o] != m.edge_of[f])
            throw BadEdgeOrbit("edge_of is not constant on the orbit of flag " +
                               std::to_string(f));
    }
    std::vector<char> used(edges, 0);
    for (int o = 0; o < ne; ++o) {
        if (size[o] != 4)
            throw BadEdgeOrbit("<a0,a2> orbit of size " + std::to_string(size[o]));
        if (eid[o] < 0 || eid[o] >= edges || used[eid[o]])
            throw BadEdgeOrbit("edge ids are not exactly 0.." + std::to_string(edges - 1));
        used[eid[o]] = 1;
    }
    return m;
}

MapCounts counts(const FlagMap& m) {
    std::vector<int> tmp;
    MapCounts r;
    r.v = orbits(m.flags(), {&m.a1, &m.a2}, tmp) + m.isolated_vertices;
    r.e = orbits(m.flags(), {&m.a0, &m.a2}, tmp);
    r.f = orbits(m.flags(), {&m.a0, &m.a1}, tmp) + m.isolated_vertices;
    r.c = orbits(m.flags(), {&m.a0, &m.a1, &m.a2}, tmp) + m.isolated_vertices;
    return r;
}

int euler_genus(const FlagMap& m) {
    std::vector<int> comp;
    const int nc = orbits(m.flags(), {&m.a0, &m.a1, &m.a2}, comp);
    std::vector<int> v(nc, 0), e(nc, 0), f(nc, 0);
    std::vector<int> orbit;
    auto tally = [&](std::initializer_list<const std::vector<int>*> gens,
                     std::vector<int>& into) {
        const int n = orbits(m.flags(), gens, orbit);
        std::vector<char> seen(n, 0);
        for (int fl = 0; fl < m.flags(); ++fl)
            if (!seen[orbit[fl]]) {
                seen[orbit[fl]] = 1;
                ++into[comp[fl]];
            }
    };
    tally({&m.a1, &m.a2}, v);
    tally({&m.a0, &m.a2}, e);
    tally({&m.a0, &m.a1}, f);
    int eps = 0;
    for (int c = 0; c < nc; ++c) eps += 2 - (v[c] - e[c] + f[c]);
    return eps; // isolated vertices are spheres: contribution 0
}

bool orientable(const FlagMap& m) {
    std::vector<signed char> color(m.flags(), -1);
    std::vector<int> stack;
    for (int f0 = 0; f0 < m.flags(); ++f0) {
        if (color[f0] >= 0) continue;
        color[f0] = 0;
        stack.push_back(f0);
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (const auto* g : {&m.a0, &m.a1, &m.a2}) {
                int t = (*g)[f];
                if (color[t] < 0) {
                    color[t] = static_cast<signed char>(1 - color[f]);
                    stack.push_back(t);
                } else if (color[t] == color[f]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int genus(const FlagMap& m) {
    if (!orientable(m)) throw NonOrientable("genus of a non-orientable map");
    int eps = euler_genus(m);
    // orientable components have even Euler genus
    return eps / 2;
}

FlagMap partial_dual(const FlagMap& m, EdgeMask subset) {
    if (m.edges() < 64 && (subset >> m.edges()) != 0)
        throw MaskOutOfRange("subset mask has bits beyond edge " +
                             std::to_string(m.edges() - 1));
    FlagMap d = m;
    for (int f = 0; f < m.flags(); ++f) {
        if ((subset >> m.edge_of[f]) & 1) {
            d.a0[f] = m.a2[f];
            d.a2[f] = m.a0[f];
        }
    }
    return d;
}

FlagMap to_map(const RotationSystem& r) {
    const int E = r.edges();
    int S = 0;
    for (const auto& v : r.vertices) S += static_cast<int>(v.size());
    const int F = 2 * S; // slot s carries flags L=2s, R=2s+1
    std::vector<int> a0(F), a1(F), a2(F), edge_of(F);
    std::vector<std::array<int, 2>> slot_of(E, {-1, -1});
    int isolated = 0;
    int s = 0;
    for (const auto& v : r.vertices) {
        const int d = static_cast<int>(v.size());
        if (d == 0) {
            ++isolated;
            continue;
        }
        for (int i = 0; i < d; ++i) {
            const int si = s + i, sj = s + (i + 1) % d;
            a2[2 * si] = 2 * si + 1;
            a2[2 * si + 1] = 2 * si;
            a1[2 * si + 1] = 2 * sj; // R(i) <-> L(i+1), wrapping; d=1 pairs R with L
            a1[2 * sj] = 2 * si + 1;
            edge_of[2 * si] = edge_of[2 * si + 1] = v[i].edge;
            auto& se = slot_of[v[i].edge];
            (se[0] < 0 ? se[0] : se[1]) = si;
        }
        s += d;
    }
    for (int e = 0; e < E; ++e) {
        const int L1 = 2 * slot_of[e][0], R1 = L1 + 1;
        const int L2 = 2 * slot_of[e][1], R2 = L2 + 1;
        if (r.twisted[e]) {
            a0[L1] = L2;
            a0[L2] = L1;
            a0[R1] = R2;
            a0[R2] = R1;
        } else {
            a0[L1] = R2;
            a0[R2] = L1;
            a0[R1] = L2;
            a0[L2] = R1;
        }
    }
    return build(std::move(a0), std::move(a1), std::move(a2), std::move(edge_of), isolated);
}

FlagMap to_map(const SignedRotation& r) { return to_map(as_system(r)); }

FlagMap restrict_edges(const RotationSystem& r, EdgeMask keep) {
    RotationSystem sub;
    std::vector<int> newid(r.edges(), -1);
    for (const auto& v : r.vertices) {
        std::vector<RotationSystem::Slot> slots;
        for (const auto& sl : v) {
            if (sl.edge < 64 && !((keep >> sl.edge) & 1)) continue;
            if (newid[sl.edge] < 0) {
                newid[sl.edge] = static_cast<int>(sub.labels.size());
                sub.labels.push_back(r.labels[sl.edge]);
                sub.twisted.push_back(r.twisted[sl.edge]);
            }
            slots.push_back({newid[sl.edge], sl.mark});
        }
        sub.vertices.push_back(std::move(slots));
    }
    return to_map(sub);
}

RotationSystem extract_rotation(const FlagMap& m) {
    const int F = m.flags();
    std::vector<int> vid(F, -1);
    int V = 0;
    {
        std::vector<int> stack;
        for (int f0 = 0; f0 < F; ++f0) {
            if (vid[f0] >= 0) continue;
            int id = V++;
            vid[f0] = id;
            stack.push_back(f0);
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (const auto* g : {&m.a1, &m.a2}) {
                    int t = (*g)[f];
                    if (vid[t] < 0) {
                        vid[t] = id;
                        stack.push_back(t);
                    }
                }
            }
        }
    }

    // Every vertex orbit splits into two mirror cycles of sigma = a2*a1, one
    // per side assignment; walking one cycle visits each slot exactly once.
    auto walk = [&](int f0) {
        std::vector<int> rflags;
        int f = f0;
        do {
            rflags.push_back(f);
            f = m.a2[m.a1[f]];
        } while (f != f0);
        return rflags;
    };

    std::vector<int> start_flag(V, -1);
    std::vector<char> visited(V, 0);
    std::vector<std::vector<int>> vertex_rflags; // per output vertex, walk order
    for (int f0 = 0; f0 < F; ++f0) {
        int root = vid[f0];
        if (visited[root]) continue;
        visited[root] = 1;
        start_flag[root] = f0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            auto rf = walk(start_flag[v]);
            vertex_rflags.push_back(rf);
            for (int Rf : rf) {
                int w = vid[m.a0[Rf]];
                if (!visited[w]) {
                    visited[w] = 1;
                    // orient w so this tree edge comes out untwisted: its L
                    // flag on the far slot is a0[Rf], so the walk starts at
                    // the matching R flag a2[a0[Rf]]
                    start_flag[w] = m.a2[m.a0[Rf]];
                    queue.push_back(w);
                }
            }
        }
    }

    RotationSystem out;
    out.twisted.assign(m.edges(), 0);
    out.labels.assign(m.edges(), "");
    std::vector<int> edge_new(m.edges(), -1);
    std::vector<int> first_rflag(m.edges(), -1);
    int next = 0;
    auto make_label = [](int k) {
        if (k < 26) return std::string(1, static_cast<char>('a' + k));
        return "e" + std::to_string(k);
    };
    for (const auto& rf : vertex_rflags) {
        std::vector<RotationSystem::Slot> slots;
        for (int Rf : rf) {
            int e = m.edge_of[Rf];
            if (edge_new[e] < 0) {
                edge_new[e] = next++;
                first_rflag[e] = Rf;
                slots.push_back({edge_new[e], false});
            } else {
                // untwisted iff a0 maps the first slot's R flag to this
                // slot's L flag (its a2 partner)
                bool tw = m.a0[first_rflag[e]] != m.a2[Rf];
                out.twisted[edge_new[e]] = tw;
                slots.push_back({edge_new[e], tw});
            }
        }
        out.vertices.push_back(std::move(slots));
    }
    for (int k = 0; k < m.edges(); ++k) out.labels[k] = make_label(k);
    for (int i = 0; i < m.isolated_vertices; ++i) out.vertices.push_back({});
    return out;
}

} // namespace pd

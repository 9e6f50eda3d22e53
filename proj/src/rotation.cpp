#include "pd/rotation.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace pd {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// commas and whitespace both separate tokens
std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

struct TokenStream {
    std::vector<std::pair<std::string, bool>> toks; // (label, negated)
};

TokenStream read_tokens(const std::vector<std::string>& raw) {
    TokenStream out;
    for (const auto& t : raw) {
        bool neg = t[0] == '-';
        std::string label = neg ? t.substr(1) : t;
        if (label.empty() || label[0] == '-')
            throw BadToken("bad token \"" + t + "\"");
        out.toks.emplace_back(label, neg);
    }
    return out;
}

} // namespace

std::string SignedRotation::str() const {
    std::string out = "(";
    std::vector<char> seen(edges(), 0);
    for (int i = 0; i < positions(); ++i) {
        if (i) out += ", ";
        int e = seq[i];
        if (seen[e] && twisted[e]) out += "-";
        out += labels[e];
        seen[e] = 1;
    }
    return out + ")";
}

std::string RotationSystem::str() const {
    std::string out;
    for (size_t v = 0; v < vertices.size(); ++v) {
        out += "v" + std::to_string(v) + ":";
        for (const auto& s : vertices[v]) {
            out += " ";
            if (s.mark) out += "-";
            out += labels[s.edge];
        }
        out += "\n";
    }
    return out;
}

SignedRotation parse_rotation(const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    auto ts = read_tokens(split_tokens(s));

    SignedRotation r;
    std::map<std::string, int> id;
    std::vector<int> occur;
    std::vector<char> neg_first, neg_second;
    for (const auto& [label, neg] : ts.toks) {
        auto [it, fresh] = id.try_emplace(label, static_cast<int>(id.size()));
        int e = it->second;
        if (fresh) {
            r.labels.push_back(label);
            occur.push_back(0);
            neg_first.push_back(0);
            neg_second.push_back(0);
        }
        if (occur[e] == 0)
            neg_first[e] = neg;
        else if (occur[e] == 1)
            neg_second[e] = neg;
        ++occur[e];
        r.seq.push_back(e);
    }
    for (size_t e = 0; e < occur.size(); ++e) {
        if (occur[e] != 2)
            throw LabelCountNotTwo("label \"" + r.labels[e] + "\" occurs " +
                                   std::to_string(occur[e]) + " times, expected 2");
        if (neg_first[e] && neg_second[e])
            throw DoubleNegative("label \"" + r.labels[e] + "\" is negated on both occurrences");
        r.twisted.push_back(neg_first[e] || neg_second[e]);
    }
    return r;
}

RotationSystem parse_rotation_system(const std::string& text) {
    RotationSystem rs;
    std::map<std::string, int> id;
    std::vector<int> occur;
    std::vector<char> m1, m2;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::string body = line;
        auto colon = body.find(':');
        if (colon != std::string::npos) body = body.substr(colon + 1);
        auto ts = read_tokens(split_tokens(body));
        std::vector<RotationSystem::Slot> slots;
        for (const auto& [label, neg] : ts.toks) {
            auto [it, fresh] = id.try_emplace(label, static_cast<int>(id.size()));
            int e = it->second;
            if (fresh) {
                rs.labels.push_back(label);
                occur.push_back(0);
                m1.push_back(0);
                m2.push_back(0);
            }
            if (occur[e] == 0)
                m1[e] = neg;
            else if (occur[e] == 1)
                m2[e] = neg;
            ++occur[e];
            slots.push_back({e, neg});
        }
        rs.vertices.push_back(std::move(slots));
    }
    for (size_t e = 0; e < occur.size(); ++e) {
        if (occur[e] != 2)
            throw LabelCountNotTwo("label \"" + rs.labels[e] + "\" occurs " +
                                   std::to_string(occur[e]) + " times, expected 2");
        if (m1[e] && m2[e])
            throw DoubleNegative("label \"" + rs.labels[e] + "\" is marked on both slots");
        rs.twisted.push_back(m1[e] || m2[e]);
    }
    return rs;
}

RotationSystem as_system(const SignedRotation& r) {
    RotationSystem rs;
    rs.labels = r.labels;
    rs.twisted = r.twisted;
    std::vector<char> seen(r.edges(), 0);
    std::vector<RotationSystem::Slot> v;
    for (int e : r.seq) {
        v.push_back({e, seen[e] && r.twisted[e] ? true : false});
        seen[e] = 1;
    }
    rs.vertices.push_back(std::move(v));
    return rs;
}

SignedRotation as_bouquet(const RotationSystem& rs) {
    int nonempty = -1;
    for (size_t v = 0; v < rs.vertices.size(); ++v) {
        if (rs.vertices[v].empty()) throw Error("isolated vertex has no bouquet form");
        if (nonempty >= 0) throw Error("rotation system has more than one vertex");
        nonempty = static_cast<int>(v);
    }
    std::vector<int> seq;
    if (nonempty >= 0)
        for (const auto& s : rs.vertices[nonempty]) seq.push_back(s.edge);
    return reindex(seq, rs.twisted, rs.labels);
}

int find_edge(const SignedRotation& r, const std::string& label) {
    for (int e = 0; e < r.edges(); ++e)
        if (r.labels[e] == label) return e;
    throw NoSuchEdge("no edge labelled \"" + label + "\"");
}

SignedRotation reindex(const std::vector<int>& seq,
                       const std::vector<char>& old_twisted,
                       const std::vector<std::string>& old_labels) {
    SignedRotation r;
    std::vector<int> newid(old_twisted.size(), -1);
    for (int e : seq) {
        if (newid[e] < 0) {
            newid[e] = r.edges();
            r.twisted.push_back(old_twisted[e]);
            r.labels.push_back(old_labels[e]);
        }
        r.seq.push_back(newid[e]);
    }
    return r;
}

} // namespace pd

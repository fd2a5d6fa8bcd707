#include "commvul/community.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace commvul {

Partition Partition::from_assignment(const Graph& g, const std::map<int, int>& assignment) {
    std::vector<std::string> missing, unknown;
    for (int label : g.labels())
        if (!assignment.count(label))
            missing.push_back(std::to_string(label));
    std::map<int, std::vector<int>> groups;
    for (auto [label, community] : assignment) {
        if (!g.has_label(label)) {
            unknown.push_back(std::to_string(label));
            continue;
        }
        groups[community].push_back(label);
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + v[i];
        return out;
    };
    if (!missing.empty())
        throw DomainError("partition misses graph nodes: " + join(missing));
    if (!unknown.empty())
        throw DomainError("partition names unknown nodes: " + join(unknown));

    std::vector<std::vector<int>> members;
    members.reserve(groups.size());
    for (auto& [id, labels] : groups) {
        std::sort(labels.begin(), labels.end());
        members.push_back(std::move(labels));
    }
    return from_members(g, members);
}

Partition Partition::from_members(const Graph& g, const std::vector<std::vector<int>>& raw) {
    std::vector<std::vector<int>> members = raw;
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [](const auto& m) { return m.empty(); }),
                  members.end());
    for (auto& m : members)
        std::sort(m.begin(), m.end());
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    Partition p;
    p.by_index_.assign(g.node_count(), 0);
    std::vector<int> dup;
    for (size_t c = 0; c < members.size(); ++c) {
        for (int label : members[c]) {
            int idx = g.index_of(label);
            if (p.by_index_[idx] != 0)
                dup.push_back(label);
            p.by_index_[idx] = static_cast<int>(c) + 1;
        }
    }
    if (!dup.empty()) {
        std::string msg = "nodes assigned to more than one community:";
        for (int label : dup)
            msg += " " + std::to_string(label);
        throw DomainError(msg);
    }
    std::vector<int> uncovered;
    for (int i = 0; i < g.node_count(); ++i)
        if (p.by_index_[i] == 0)
            uncovered.push_back(g.label_at(i));
    if (!uncovered.empty()) {
        std::string msg = "partition misses graph nodes:";
        for (int label : uncovered)
            msg += " " + std::to_string(label);
        throw DomainError(msg);
    }
    p.members_ = std::move(members);
    return p;
}

double modularity(const Graph& g, const Partition& p) {
    const double m = g.edge_count();
    if (m == 0)
        throw DomainError("modularity of a graph without edges");
    const int k = p.community_count();
    std::vector<int> internal(k, 0), degree(k, 0);
    for (auto [u, v] : g.edges()) {
        int cu = p.community_of(g, u);
        int cv = p.community_of(g, v);
        if (cu == cv)
            ++internal[cu - 1];
    }
    for (int i = 0; i < g.node_count(); ++i)
        degree[p.community_of_index(i) - 1] += g.degree_at(i);

    double q = 0.0;
    for (int c = 0; c < k; ++c) {
        double frac = internal[c] / m;
        double dc = degree[c] / (2.0 * m);
        q += frac - dc * dc;
    }
    return q;
}

int community_degree(const Graph& g, const std::vector<int>& member_labels) {
    int total = 0;
    for (int label : member_labels)
        total += g.degree(label);
    return total;
}

namespace {

// Greedy merge state: communities keyed by their smallest member label.
struct MergeState {
    std::map<int, std::set<int>> members;           // id -> labels
    std::map<int, int> degree;                      // id -> total degree
    std::map<std::pair<int, int>, int> cross;       // (a<b) -> cross edges
};

} // namespace

DetectionResult detect_communities(const Graph& g) {
    if (g.edge_count() == 0)
        throw DomainError("community detection needs at least one edge");
    const double m = g.edge_count();

    MergeState st;
    for (int i = 0; i < g.node_count(); ++i) {
        int label = g.label_at(i);
        st.members[label] = {label};
        st.degree[label] = g.degree_at(i);
    }
    for (auto [u, v] : g.edges())
        ++st.cross[std::minmax(u, v)];

    MergeTrace trace;
    double q = 0.0;
    for (auto& [id, d] : st.degree)
        q -= (d / (2.0 * m)) * (d / (2.0 * m));
    trace.initial_q = q;

    while (st.members.size() > 1) {
        // Best connected pair by gain; ties prefer the smallest merged size,
        // then the smallest community ids.
        bool found = false;
        double best_dq = 0.0;
        int best_a = 0, best_b = 0, best_size = 0;
        for (const auto& [pair, x] : st.cross) {
            auto [a, b] = pair;
            double dq = x / m - st.degree[a] * static_cast<double>(st.degree[b]) / (2.0 * m * m);
            int size = static_cast<int>(st.members[a].size() + st.members[b].size());
            bool better;
            if (!found) {
                better = true;
            } else if (dq != best_dq) {
                better = dq > best_dq;
            } else if (size != best_size) {
                better = size < best_size;
            } else {
                better = a < best_a || (a == best_a && b < best_b);
            }
            if (better) {
                found = true;
                best_dq = dq;
                best_a = a;
                best_b = b;
                best_size = size;
            }
        }
        if (!found || best_dq < 0.0)
            break;

        int a = best_a, b = best_b;   // a < b; b merges into a
        st.members[a].insert(st.members[b].begin(), st.members[b].end());
        st.members.erase(b);
        st.degree[a] += st.degree[b];
        st.degree.erase(b);
        std::map<std::pair<int, int>, int> next;
        for (const auto& [pair, x] : st.cross) {
            if (pair == std::make_pair(a, b))
                continue;
            int u = pair.first == b ? a : pair.first;
            int v = pair.second == b ? a : pair.second;
            if (u == v)
                continue;
            next[std::minmax(u, v)] += x;
        }
        st.cross = std::move(next);

        q += best_dq;
        trace.merges.push_back({a, b, best_dq, q});
    }

    std::vector<std::vector<int>> members;
    members.reserve(st.members.size());
    for (auto& [id, set] : st.members)
        members.emplace_back(set.begin(), set.end());

    DetectionResult result{Partition::from_members(g, members), std::move(trace), q};
    return result;
}

Partition load_partition(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    std::map<int, std::vector<int>> groups;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        if (head.back() != ':')
            throw ParseError("expected 'community:' prefix, got '" + head + "'", lineno);
        head.pop_back();
        int community = 0;
        auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), community);
        if (ec != std::errc() || p != head.data() + head.size())
            throw ParseError("community index is not an integer: '" + head + "'", lineno);
        int label = 0;
        std::string tok;
        while (ls >> tok) {
            auto [tp, tec] = std::from_chars(tok.data(), tok.data() + tok.size(), label);
            if (tec != std::errc() || tp != tok.data() + tok.size())
                throw ParseError("node label is not an integer: '" + tok + "'", lineno);
            groups[community].push_back(label);
        }
    }
    if (groups.empty())
        throw ParseError("no community lines found");

    std::vector<std::vector<int>> members;
    members.reserve(groups.size());
    for (auto& [id, labels] : groups)
        members.push_back(std::move(labels));
    return Partition::from_members(g, members);
}

std::string partition_to_text(const Partition& p) {
    std::string out;
    for (int c = 1; c <= p.community_count(); ++c) {
        out += std::to_string(c) + ":";
        for (int label : p.members(c))
            out += " " + std::to_string(label);
        out += "\n";
    }
    return out;
}

} // namespace commvul

#ifndef SMCKIT_ENGINE_HPP
#define SMCKIT_ENGINE_HPP

#include <deque>
#include <functional>
#include <unordered_map>

#include "smckit/relations.hpp"

namespace smck {

/// Type-erased strict evaluator used for refutation: maps a path to the
/// key of its image arrow in some target with decidable arrow equality.
template <class MA, class MB>
struct Extension {
    std::string name;
    std::function<std::string(const TenPath<MA, MB>&)> eval;
};

struct TraceStep {
    std::string rel;
    int pos;
    std::string path_key; // key of the path after this step
};

/// Equal carries two replayable rewrite chains meeting in the middle:
/// p -> ... -> meet and q -> ... -> meet.
template <class MA, class MB>
struct EqVerdict {
    enum class K { equal, distinct, unknown };
    K k;
    std::vector<TraceStep> trace_from_lhs;
    std::vector<TraceStep> trace_from_rhs;
    std::string extension; // distinct: the separating extension
    std::string lhs_image, rhs_image;
    int expanded = 0;

    bool is_equal() const { return k == K::equal; }
    bool is_distinct() const { return k == K::distinct; }
    bool is_unknown() const { return k == K::unknown; }
};

/// Semi-decision of the presented congruence: refute by evaluating the
/// extensions (sound since every extension respects every relation),
/// otherwise bidirectional breadth-first search over single-relation
/// rewrites, spending at most `budget` node expansions.
template <class MA, class MB>
EqVerdict<MA, MB> decide_equal(const PresCtx<MA, MB>& P,
                               const TenPath<MA, MB>& p,
                               const TenPath<MA, MB>& q, int budget,
                               const std::vector<Extension<MA, MB>>& exts) {
    using V = EqVerdict<MA, MB>;
    if (!word_eq(p.dom, q.dom) || !word_eq(p.cod(), q.cod()))
        throw Error("decide_equal: endpoint mismatch");

    for (const auto& ext : exts) {
        std::string ip = ext.eval(p);
        std::string iq = ext.eval(q);
        if (ip != iq) {
            V v;
            v.k = V::K::distinct;
            v.extension = ext.name;
            v.lhs_image = ip;
            v.rhs_image = iq;
            return v;
        }
    }

    struct Node {
        TenPath<MA, MB> path;
        int parent;
        std::string rel;
        int pos;
    };
    std::vector<Node> nodes[2];
    std::unordered_map<std::string, int> seen[2];
    std::deque<int> frontier[2];

    auto add_node = [&](int side, Node n) -> int {
        std::string k = n.path.key();
        if (seen[side].count(k)) return -1;
        int id = static_cast<int>(nodes[side].size());
        seen[side][k] = id;
        nodes[side].push_back(std::move(n));
        frontier[side].push_back(id);
        return id;
    };
    auto chain = [&](int side, int from) {
        std::vector<TraceStep> steps;
        for (int i = from; i > 0; i = nodes[side][i].parent)
            steps.push_back(TraceStep{nodes[side][i].rel, nodes[side][i].pos,
                                      nodes[side][i].path.key()});
        std::reverse(steps.begin(), steps.end());
        return steps;
    };

    add_node(0, {p, -1, "", 0});
    add_node(1, {q, -1, "", 0});
    if (p.key() == q.key()) {
        V v;
        v.k = V::K::equal;
        return v;
    }

    int expanded = 0;
    while (expanded < budget &&
           (!frontier[0].empty() || !frontier[1].empty())) {
        int side;
        if (frontier[0].empty())
            side = 1;
        else if (frontier[1].empty())
            side = 0;
        else
            side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        int cur = frontier[side].front();
        frontier[side].pop_front();
        ++expanded;
        TenPath<MA, MB> cur_path = nodes[side][cur].path;
        for (auto& rw : neighbors(P, cur_path)) {
            Node n{std::move(rw.result), cur, rw.rel, rw.pos};
            std::string key = n.path.key();
            int id = add_node(side, std::move(n));
            if (id < 0) continue;
            auto other = seen[1 - side].find(key);
            if (other != seen[1 - side].end()) {
                V v;
                v.k = V::K::equal;
                v.expanded = expanded;
                int lhs_node = side == 0 ? id : other->second;
                int rhs_node = side == 0 ? other->second : id;
                v.trace_from_lhs = chain(0, lhs_node);
                v.trace_from_rhs = chain(1, rhs_node);
                return v;
            }
        }
    }
    V v;
    v.k = V::K::unknown;
    v.expanded = expanded;
    return v;
}

/// Replays one rewrite chain from `start`; returns the reached path or
/// throws if some step is not a legal rewrite.
template <class MA, class MB>
TenPath<MA, MB> replay_chain(const PresCtx<MA, MB>& P,
                             const TenPath<MA, MB>& start,
                             const std::vector<TraceStep>& steps) {
    TenPath<MA, MB> cur = start;
    for (const auto& step : steps) {
        bool found = false;
        for (auto& rw : neighbors(P, cur)) {
            if (rw.rel == step.rel && rw.pos == step.pos &&
                rw.result.key() == step.path_key) {
                cur = std::move(rw.result);
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(cat("witness replay failed at relation ", step.rel,
                            " pos ", step.pos));
    }
    return cur;
}

/// Checks both chains of an Equal witness meet at the same path.
template <class MA, class MB>
bool replay_witness(const PresCtx<MA, MB>& P, const TenPath<MA, MB>& p,
                    const TenPath<MA, MB>& q, const EqVerdict<MA, MB>& v) {
    if (!v.is_equal()) return false;
    TenPath<MA, MB> ml = replay_chain(P, p, v.trace_from_lhs);
    TenPath<MA, MB> mr = replay_chain(P, q, v.trace_from_rhs);
    return ml.key() == mr.key();
}

/// All intermediate paths of both witness chains, for re-evaluating the
/// extensions along the proof.
template <class MA, class MB>
std::vector<TenPath<MA, MB>> witness_paths(const PresCtx<MA, MB>& P,
                                           const TenPath<MA, MB>& p,
                                           const TenPath<MA, MB>& q,
                                           const EqVerdict<MA, MB>& v) {
    std::vector<TenPath<MA, MB>> out;
    TenPath<MA, MB> cur = p;
    out.push_back(cur);
    for (const auto& step : v.trace_from_lhs) {
        for (auto& rw : neighbors(P, cur))
            if (rw.rel == step.rel && rw.pos == step.pos &&
                rw.result.key() == step.path_key) {
                cur = std::move(rw.result);
                break;
            }
        out.push_back(cur);
    }
    cur = q;
    out.push_back(cur);
    for (const auto& step : v.trace_from_rhs) {
        for (auto& rw : neighbors(P, cur))
            if (rw.rel == step.rel && rw.pos == step.pos &&
                rw.result.key() == step.path_key) {
                cur = std::move(rw.result);
                break;
            }
        out.push_back(cur);
    }
    return out;
}

} // namespace smck

#endif

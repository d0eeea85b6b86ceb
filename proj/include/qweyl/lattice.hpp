#pragma once

#include <deque>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qweyl/symbols.hpp"

namespace qweyl {

// Degree/multiplicity data d1*H1 + d2*H2 - sum m_i*E_i with the blow-up
// intersection pairing.
struct LatticeVector {
    int d1 = 0, d2 = 0;
    std::vector<int> m;  // length N

    LatticeVector() = default;
    LatticeVector(int d1_, int d2_, std::vector<int> m_) : d1(d1_), d2(d2_), m(std::move(m_)) {}

    static LatticeVector zero(int n) { return {0, 0, std::vector<int>(n, 0)}; }
    static LatticeVector E(int n, int i) {  // exceptional class E_i (1-based)
        if (i < 1 || i > n) throw engine_error("point index out of range");
        LatticeVector v = zero(n);
        v.m[i - 1] = -1;  // lambda = -m_i E_i
        return v;
    }
    static LatticeVector H(int n, int which) {
        LatticeVector v = zero(n);
        (which == 1 ? v.d1 : v.d2) = 1;
        return v;
    }

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
        a.d1 += b.d1;
        a.d2 += b.d2;
        for (size_t i = 0; i < a.m.size(); ++i) a.m[i] += b.m[i];
        return a;
    }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
        a.d1 -= b.d1;
        a.d2 -= b.d2;
        for (size_t i = 0; i < a.m.size(); ++i) a.m[i] -= b.m[i];
        return a;
    }
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    long pair(const LatticeVector& o) const {
        long w = static_cast<long>(d1) * o.d2 + static_cast<long>(d2) * o.d1;
        for (size_t i = 0; i < m.size(); ++i) w -= static_cast<long>(m[i]) * o.m[i];
        return w;
    }
};

inline LatticeVector delta_red(int n) {
    return {2, 2, std::vector<int>(n, 1)};
}

// dim = (d1+1)(d2+1) - sum m_k(m_k+1)/2
inline long dimension_count(const LatticeVector& lam) {
    long d = static_cast<long>(lam.d1 + 1) * (lam.d2 + 1);
    for (int mk : lam.m) d -= static_cast<long>(mk) * (mk + 1) / 2;
    return d;
}

// the same number through the pairing, (1/2)l.l + (1/2)l.delta + 1
inline long dimension_count_pairing(const LatticeVector& lam) {
    long n = lam.pair(lam) + lam.pair(delta_red(static_cast<int>(lam.m.size()))) + 2;
    return n / 2;
}

enum class GenKind { Swap, XType, YType };

struct Generator {
    GenKind kind;
    int a, b;  // 1-based point indices; swap {a,b}, s^x_{a,b}, s^y_{a,b}
};

// Per-type tables: simple reflections, Dynkin adjacency, condition index
// sets for the two slice templates, and the invariant curve data.
struct GroupSpec {
    GroupType type;
    int n;
    std::vector<Generator> gens;
    std::vector<std::pair<int, int>> edges;  // Dynkin adjacency (generator indices)
    std::vector<int> fx_I, fx_J;             // x-template: (1 + q^t h2/e_k y) for I, (1 + q^t e_k y) for J
    std::vector<int> fy_I, fy_J;             // y-template: (1 + q^t x/e_k) for I, (1 + q^t e_k/h1 x) for J
    LatticeVector curve_class;
    std::string elim_symbol;  // unit-exponent parameter removed by the curve constraint

    bool adjacent(int i, int j) const {
        for (auto [u, v] : edges)
            if ((u == i && v == j) || (u == j && v == i)) return true;
        return false;
    }

    static const GroupSpec& get(GroupType t);
};

namespace detail {

inline GroupSpec make_spec(GroupType t) {
    GroupSpec s;
    s.type = t;
    s.n = point_count(t);
    auto S = [](int a, int b) { return Generator{GenKind::Swap, a, b}; };
    auto X = [](int a, int b) { return Generator{GenKind::XType, a, b}; };
    auto Y = [](int a, int b) { return Generator{GenKind::YType, a, b}; };
    switch (t) {
        case GroupType::E8:
            s.gens = {X(10, 11), S(8, 9), S(7, 8), Y(1, 7), S(1, 2),
                      S(2, 3),   S(3, 4), S(4, 5), S(5, 6)};
            s.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {0, 3}};
            s.fx_I = {10};
            s.fx_J = {11};
            s.fy_I = {1, 2, 3, 4, 5, 6};
            s.fy_J = {7, 8, 9};
            s.curve_class = {6, 3, {1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3}};
            s.elim_symbol = "e1";
            break;
        case GroupType::E7:
            s.gens = {X(9, 10), S(7, 8), S(6, 7), S(5, 6), Y(1, 5), S(1, 2), S(2, 3), S(3, 4)};
            s.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 4}};
            s.fx_I = {9};
            s.fx_J = {10};
            s.fy_I = {1, 2, 3, 4};
            s.fy_J = {5, 6, 7, 8};
            s.curve_class = {4, 2, {1, 1, 1, 1, 1, 1, 1, 1, 2, 2}};
            s.elim_symbol = "e1";
            break;
        case GroupType::E6:
            s.gens = {S(8, 9), S(5, 6), S(4, 5), Y(1, 4), S(1, 2), S(2, 3), X(7, 8)};
            s.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 0}};
            s.fx_I = {7};
            s.fx_J = {8, 9};
            s.fy_I = {1, 2, 3};
            s.fy_J = {4, 5, 6};
            s.curve_class = {3, 2, {1, 1, 1, 1, 1, 1, 2, 1, 1}};
            s.elim_symbol = "e8";
            break;
        case GroupType::D5:
            // the y-type pair is (7,3): index 7 carries the x/e factor family
            // of the condition templates, index 3 the e/h1 family
            s.gens = {S(7, 8), S(3, 4), Y(7, 3), X(1, 5), S(1, 2), S(5, 6)};
            s.edges = {{1, 2}, {2, 3}, {3, 5}, {0, 2}, {4, 3}};
            s.fx_I = {1, 2};
            s.fx_J = {5, 6};
            s.fy_I = {7, 8};
            s.fy_J = {3, 4};
            s.curve_class = {2, 2, {1, 1, 1, 1, 1, 1, 1, 1}};
            s.elim_symbol = "e2";
            break;
    }
    return s;
}

}  // namespace detail

inline const GroupSpec& GroupSpec::get(GroupType t) {
    static const GroupSpec e8 = detail::make_spec(GroupType::E8);
    static const GroupSpec e7 = detail::make_spec(GroupType::E7);
    static const GroupSpec e6 = detail::make_spec(GroupType::E6);
    static const GroupSpec d5 = detail::make_spec(GroupType::D5);
    switch (t) {
        case GroupType::E8: return e8;
        case GroupType::E7: return e7;
        case GroupType::E6: return e6;
        case GroupType::D5: return d5;
    }
    return e8;
}

// induced linear action on degree/multiplicity data
inline LatticeVector star_action(const GroupSpec& spec, int i, LatticeVector lam) {
    const Generator& g = spec.gens.at(i);
    int a = g.a - 1, b = g.b - 1;
    switch (g.kind) {
        case GenKind::Swap:
            std::swap(lam.m[a], lam.m[b]);
            break;
        case GenKind::XType: {
            int d1 = lam.d1, ma = lam.m[a], mb = lam.m[b];
            lam.d2 = d1 + lam.d2 - ma - mb;
            lam.m[a] = d1 - mb;
            lam.m[b] = d1 - ma;
            break;
        }
        case GenKind::YType: {
            int d2 = lam.d2, ma = lam.m[a], mb = lam.m[b];
            lam.d1 = lam.d1 + d2 - ma - mb;
            lam.m[a] = d2 - mb;
            lam.m[b] = d2 - ma;
            break;
        }
    }
    return lam;
}

// words act rightmost-first: "3 2 1 0 2 4 3" means s3 s2 s1 s0 s2 s4 s3
inline LatticeVector star_word(const GroupSpec& spec, const std::vector<int>& word,
                               LatticeVector lam) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) lam = star_action(spec, *it, lam);
    return lam;
}

// Coxeter relation words for a simply-laced diagram: s_i^2 = 1 and the
// rank-2 relations (s_i s_j)^m = 1, m = 3 when adjacent else 2.
struct RelationCheck {
    std::vector<int> word;  // applied to a probe, must act as identity
    std::string label;
};

inline std::vector<RelationCheck> coxeter_relations(const GroupSpec& spec) {
    std::vector<RelationCheck> rels;
    int k = static_cast<int>(spec.gens.size());
    for (int i = 0; i < k; ++i)
        rels.push_back({{i, i}, "s" + std::to_string(i) + "^2"});
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> w;
            int m = spec.adjacent(i, j) ? 3 : 2;
            for (int r = 0; r < m; ++r) {
                w.push_back(i);
                w.push_back(j);
            }
            rels.push_back({w, "(s" + std::to_string(i) + " s" + std::to_string(j) + ")^" +
                                   std::to_string(m)});
        }
    }
    return rels;
}

// breadth-first orbit of the seed classes up to word length max_len
inline std::set<LatticeVector> orbit(const GroupSpec& spec, const std::vector<LatticeVector>& seeds,
                                     int max_len) {
    std::set<LatticeVector> seen(seeds.begin(), seeds.end());
    std::deque<std::pair<LatticeVector, int>> queue;
    for (const auto& s : seeds) queue.emplace_back(s, 0);
    while (!queue.empty()) {
        auto [lam, len] = queue.front();
        queue.pop_front();
        if (len >= max_len) continue;
        for (size_t i = 0; i < spec.gens.size(); ++i) {
            LatticeVector nxt = star_action(spec, static_cast<int>(i), lam);
            if (seen.insert(nxt).second) queue.emplace_back(nxt, len + 1);
        }
    }
    return seen;
}

// orbit with a witness word for each element (word maps the recorded seed to it)
struct OrbitEntry {
    LatticeVector lam;
    int seed_index;
    std::vector<int> word;  // leftmost-applied-last, i.e. CLI order
};

inline std::vector<OrbitEntry> orbit_with_words(const GroupSpec& spec,
                                                const std::vector<LatticeVector>& seeds,
                                                int max_len) {
    std::vector<OrbitEntry> out;
    std::set<LatticeVector> seen;
    std::deque<OrbitEntry> queue;
    for (size_t s = 0; s < seeds.size(); ++s) {
        if (seen.insert(seeds[s]).second) {
            out.push_back({seeds[s], static_cast<int>(s), {}});
            queue.push_back(out.back());
        }
    }
    while (!queue.empty()) {
        OrbitEntry cur = queue.front();
        queue.pop_front();
        if (static_cast<int>(cur.word.size()) >= max_len) continue;
        for (size_t i = 0; i < spec.gens.size(); ++i) {
            LatticeVector nxt = star_action(spec, static_cast<int>(i), cur.lam);
            if (seen.insert(nxt).second) {
                OrbitEntry e{nxt, cur.seed_index, cur.word};
                e.word.insert(e.word.begin(), static_cast<int>(i));  // new letter acts last
                out.push_back(e);
                queue.push_back(e);
            }
        }
    }
    return out;
}

}  // namespace qweyl

#pragma once

#include <random>
#include <string>
#include <vector>

#include "qweyl/element.hpp"
#include "qweyl/lattice.hpp"

namespace qt {

using namespace qweyl;

inline SkewElement sym(const TablePtr& tab, const std::string& name, int e = 1) {
    return SkewElement::sym(tab, tab->id_of(name), e);
}

// monomial from (name, exponent) pairs
inline SkewElement mono(const TablePtr& tab,
                        std::initializer_list<std::pair<const char*, int>> entries,
                        Rat c = Rat(1)) {
    ExponentVector v;
    for (const auto& [n, e] : entries) v.add(tab->id_of(n), e);
    return SkewElement::monomial(tab, std::move(v), std::move(c));
}

inline SkewElement c1(const TablePtr& tab) { return SkewElement::one(tab); }

// random small rationals with numerator/denominator in [2,97], all distinct
struct RatSampler {
    std::mt19937_64 rng;
    std::vector<Rat> used;
    explicit RatSampler(uint64_t seed) : rng(seed) {}
    Rat next() {
        std::uniform_int_distribution<int> d(2, 97);
        for (;;) {
            Rat r(d(rng), d(rng));
            r.canonicalize();
            bool dup = false;
            for (const auto& u : used)
                if (u == r) { dup = true; break; }
            if (!dup) {
                used.push_back(r);
                return r;
            }
        }
    }
};

// brute-force reordering product: sort symbol units by id, one adjacent
// transposition at a time, paying the q-power each swapped pair demands.
// Independent of the twist form implementation.
inline std::pair<qweyl::ExponentVector, long> oracle_multiply(const TablePtr& tab,
                                                              const qweyl::ExponentVector& a,
                                                              const qweyl::ExponentVector& b) {
    std::vector<std::pair<int, int>> units;  // (symbol, +-1)
    auto push = [&](const qweyl::ExponentVector& v) {
        for (auto [id, e] : v.entries)
            for (int k = 0; k < std::abs(e); ++k) units.emplace_back(id, e > 0 ? 1 : -1);
    };
    push(a);
    push(b);
    // q-power for swapping u past v (u currently left of v, u id > v id)
    auto swap_cost = [&](int u, int v) -> long {
        const auto& t = *tab;
        if (u == t.y_id && v == t.x_id) return 1;
        if (t.is_t(u) && t.is_e(v) && (u - t.t_base) == (v - t.e_base)) return -1;
        if (u == t.s1_id && v == t.h2_id) return 1;
        if (u == t.s2_id && v == t.h1_id) return 1;
        return 0;
    };
    long qpow = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < units.size(); ++i) {
            if (units[i].first > units[i + 1].first) {
                qpow += swap_cost(units[i].first, units[i + 1].first) * units[i].second *
                        units[i + 1].second;
                std::swap(units[i], units[i + 1]);
                moved = true;
            }
        }
    }
    qweyl::ExponentVector out;
    for (auto [id, s] : units) out.add(id, s);
    return {out, qpow};
}

}  // namespace qt

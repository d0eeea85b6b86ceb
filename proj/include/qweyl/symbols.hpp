#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/rational.hpp"

namespace qweyl {

enum class GroupType { E8, E7, E6, D5 };

inline int point_count(GroupType t) {
    switch (t) {
        case GroupType::E8: return 11;
        case GroupType::E7: return 10;
        case GroupType::E6: return 9;
        case GroupType::D5: return 8;
    }
    return 0;
}

inline std::string group_name(GroupType t) {
    switch (t) {
        case GroupType::E8: return "e8";
        case GroupType::E7: return "e7";
        case GroupType::E6: return "e6";
        case GroupType::D5: return "d5";
    }
    return "?";
}

inline std::optional<GroupType> parse_group(const std::string& s) {
    if (s == "e8" || s == "E8") return GroupType::E8;
    if (s == "e7" || s == "E7") return GroupType::E7;
    if (s == "e6" || s == "E6") return GroupType::E6;
    if (s == "d5" || s == "D5") return GroupType::D5;
    return std::nullopt;
}

// Symbol layout for one group type:
//   q, h1, h2, e1..eN          PARAM block
//   s1, s2, t1..tN             TAU block (sigma, tau variables)
//   x, y                       POS block
//   user constants             PARAM block, zero twist against everything
//
// The q-commutation relations are all encoded by one pairing: a TAU symbol
// twists against its partner PARAM symbol (s1<->h2, s2<->h1 with +1,
// ti<->ei with -1) and y twists against x with +1.  Constants never twist.
class SymbolTable {
  public:
    GroupType type;
    int npoints;
    std::vector<std::string> names;
    std::map<std::string, int> by_name;
    int q_id = 0, h1_id = 1, h2_id = 2;
    int e_base = 3;      // e_i -> e_base + i - 1
    int s1_id, s2_id;
    int t_base;          // t_i -> t_base + i - 1
    int x_id, y_id;
    int const_base;      // first constant id (== names.size() if none)
    std::optional<Rat> q_value;  // set => q specialized, twists fold into coefficients

    static std::shared_ptr<const SymbolTable> make(GroupType type,
                                                   std::vector<std::string> constants = {},
                                                   std::optional<Rat> qval = std::nullopt) {
        auto tab = std::make_shared<SymbolTable>();
        tab->type = type;
        tab->npoints = point_count(type);
        tab->q_value = std::move(qval);
        auto add = [&](const std::string& n) {
            tab->by_name[n] = static_cast<int>(tab->names.size());
            tab->names.push_back(n);
            return static_cast<int>(tab->names.size()) - 1;
        };
        add("q");
        add("h1");
        add("h2");
        for (int i = 1; i <= tab->npoints; ++i) add("e" + std::to_string(i));
        tab->s1_id = add("s1");
        tab->s2_id = add("s2");
        tab->t_base = static_cast<int>(tab->names.size());
        for (int i = 1; i <= tab->npoints; ++i) add("t" + std::to_string(i));
        tab->x_id = add("x");
        tab->y_id = add("y");
        tab->const_base = static_cast<int>(tab->names.size());
        for (auto& c : constants) {
            if (tab->by_name.count(c)) throw engine_error("duplicate symbol " + c);
            add(c);
        }
        return tab;
    }

    int size() const { return static_cast<int>(names.size()); }
    int e(int i) const { return e_base + i - 1; }  // 1-based
    int t(int i) const { return t_base + i - 1; }
    bool is_e(int id) const { return id >= e_base && id < e_base + npoints; }
    bool is_t(int id) const { return id >= t_base && id < t_base + npoints; }
    bool is_tau_block(int id) const { return id == s1_id || id == s2_id || is_t(id); }
    bool is_pos(int id) const { return id == x_id || id == y_id; }
    bool is_const(int id) const { return id >= const_base; }
    bool is_param_block(int id) const {
        return id == q_id || id == h1_id || id == h2_id || is_e(id) || is_const(id);
    }
    // partner/sign of the twist pairing for a TAU symbol
    int tau_partner(int id) const {
        if (id == s1_id) return h2_id;
        if (id == s2_id) return h1_id;
        return e_base + (id - t_base);
    }
    int tau_sign(int id) const { return (id == s1_id || id == s2_id) ? 1 : -1; }

    int id_of(const std::string& n) const {
        auto it = by_name.find(n);
        if (it == by_name.end()) throw engine_error("unknown symbol " + n);
        return it->second;
    }
};

using TablePtr = std::shared_ptr<const SymbolTable>;

// Sparse integer exponent vector, sorted by symbol id, zero entries pruned.
class ExponentVector {
  public:
    std::vector<std::pair<int, int>> entries;  // (symbol id, exponent)

    ExponentVector() = default;

    int get(int id) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), id,
                                   [](const auto& p, int v) { return p.first < v; });
        return (it != entries.end() && it->first == id) ? it->second : 0;
    }

    void set(int id, int e) {
        auto it = std::lower_bound(entries.begin(), entries.end(), id,
                                   [](const auto& p, int v) { return p.first < v; });
        if (it != entries.end() && it->first == id) {
            if (e == 0)
                entries.erase(it);
            else
                it->second = e;
        } else if (e != 0) {
            entries.insert(it, {id, e});
        }
    }

    void add(int id, int e) { if (e != 0) set(id, get(id) + e); }

    ExponentVector& operator+=(const ExponentVector& o) {
        if (o.entries.empty()) return *this;
        std::vector<std::pair<int, int>> out;
        out.reserve(entries.size() + o.entries.size());
        auto a = entries.begin();
        auto b = o.entries.begin();
        while (a != entries.end() || b != o.entries.end()) {
            if (b == o.entries.end() || (a != entries.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == entries.end() || b->first < a->first) {
                out.push_back(*b++);
            } else {
                int e = a->second + b->second;
                if (e != 0) out.emplace_back(a->first, e);
                ++a;
                ++b;
            }
        }
        entries = std::move(out);
        return *this;
    }

    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
        a += b;
        return a;
    }

    ExponentVector negated() const {
        ExponentVector r = *this;
        for (auto& p : r.entries) p.second = -p.second;
        return r;
    }

    bool empty() const { return entries.empty(); }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
        return a.entries <=> b.entries;
    }
};

inline ExponentVector ev_of(int id, int e = 1) {
    ExponentVector v;
    v.set(id, e);
    return v;
}

// q-power picked up when the right factor's PARAM block moves left across
// the left factor's TAU block plus the right x across the left y
// (tau^lam e^mu = q^{lam.mu} e^mu tau^lam and yx = qxy in one formula).
inline long twist(const ExponentVector& left, const ExponentVector& right, const SymbolTable& tab) {
    long w = 0;
    for (const auto& [id, e] : left.entries) {
        if (tab.is_tau_block(id)) {
            int p = right.get(tab.tau_partner(id));
            if (p) w += static_cast<long>(e) * tab.tau_sign(id) * p;
        } else if (id == tab.y_id) {
            int p = right.get(tab.x_id);
            if (p) w += static_cast<long>(e) * p;
        }
    }
    return w;
}

// exponent with which q conjugates a monomial past another: A B = q^d B A
inline long twist_conj(const ExponentVector& a, const ExponentVector& b, const SymbolTable& tab) {
    return twist(a, b, tab) - twist(b, a, tab);
}

}  // namespace qweyl

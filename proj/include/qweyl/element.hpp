#pragma once

#include <climits>
#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qweyl/rational.hpp"
#include "qweyl/symbols.hpp"

namespace qweyl {

// Monomial linear map on the PARAM exponent lattice (symbol -> monomial
// image). Symbols not listed map to themselves. q is never remapped.
struct ParamMap {
    std::map<int, ExponentVector> images;

    const ExponentVector* image(int id) const {
        auto it = images.find(id);
        return it == images.end() ? nullptr : &it->second;
    }
};

// Normal-ordered element of the skew algebra: a finite rational combination
// of monomials q^* h^* e^* s^* t^* x^i y^j with all reordering q-powers
// already folded in.  Also serves as the PARAM-only coefficient ring.
class SkewElement {
  public:
    TablePtr tab;
    std::map<ExponentVector, Rat> terms;

    SkewElement() = default;
    explicit SkewElement(TablePtr t) : tab(std::move(t)) {}

    static SkewElement zero(TablePtr t) { return SkewElement(std::move(t)); }

    static SkewElement monomial(TablePtr t, ExponentVector m, Rat c = Rat(1)) {
        SkewElement e(std::move(t));
        e.add_term(std::move(m), std::move(c));
        return e;
    }

    static SkewElement one(TablePtr t) { return monomial(std::move(t), {}); }

    static SkewElement sym(TablePtr t, int id, int exp = 1) {
        return monomial(std::move(t), ev_of(id, exp));
    }

    bool is_zero() const { return terms.empty(); }

    void check_table(const SkewElement& o) const {
        if (tab != o.tab) throw table_mismatch("elements over different symbol tables");
    }

    // apply q^k to a coefficient/monomial pair, honoring q specialization
    void apply_q_power(ExponentVector& m, Rat& c, long k) const {
        if (k == 0) return;
        if (tab->q_value)
            c *= rat_pow(*tab->q_value, k);
        else
            m.add(tab->q_id, static_cast<int>(k));
    }

    void add_term(ExponentVector m, Rat c) {
        if (c == 0) return;
        if (tab->q_value) {
            if (int qe = m.get(tab->q_id)) {
                c *= rat_pow(*tab->q_value, qe);
                m.set(tab->q_id, 0);
            }
        }
        auto [it, inserted] = terms.try_emplace(std::move(m), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    SkewElement& operator+=(const SkewElement& o) {
        check_table(o);
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }

    SkewElement& operator-=(const SkewElement& o) {
        check_table(o);
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }

    friend SkewElement operator+(SkewElement a, const SkewElement& b) { a += b; return a; }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) { a -= b; return a; }

    SkewElement operator-() const {
        SkewElement r(tab);
        for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
        return r;
    }

    SkewElement& operator*=(const Rat& c) {
        if (c == 0) { terms.clear(); return *this; }
        for (auto& [m, v] : terms) v *= c;
        return *this;
    }

    friend SkewElement operator*(SkewElement a, const Rat& c) { a *= c; return a; }
    friend SkewElement operator*(const Rat& c, SkewElement a) { a *= c; return a; }

    friend SkewElement operator*(const SkewElement& a, const SkewElement& b) {
        a.check_table(b);
        SkewElement r(a.tab);
        for (const auto& [ma, ca] : a.terms) {
            for (const auto& [mb, cb] : b.terms) {
                long k = twist(ma, mb, *a.tab);
                ExponentVector m = ma + mb;
                Rat c = ca * cb;
                r.apply_q_power(m, c, k);
                r.add_term(std::move(m), std::move(c));
            }
        }
        return r;
    }

    SkewElement& operator*=(const SkewElement& o) { return *this = *this * o; }

    // right multiplication by a single monomial (c, m)
    SkewElement times_monomial(const ExponentVector& m, const Rat& c) const {
        SkewElement r(tab);
        for (const auto& [ma, ca] : terms) {
            long k = twist(ma, m, *tab);
            ExponentVector nm = ma + m;
            Rat nc = ca * c;
            apply_q_power(nm, nc, k);
            r.add_term(std::move(nm), std::move(nc));
        }
        return r;
    }

    friend bool operator==(const SkewElement& a, const SkewElement& b) {
        return a.tab == b.tab && a.terms == b.terms;
    }

    bool is_param_only() const {
        for (const auto& [m, c] : terms)
            for (const auto& [id, e] : m.entries)
                if (!tab->is_param_block(id)) return false;
        return true;
    }

    bool tau_free() const {
        for (const auto& [m, c] : terms)
            for (const auto& [id, e] : m.entries)
                if (tab->is_tau_block(id)) return false;
        return true;
    }

    bool is_single_monomial() const { return terms.size() == 1; }

    int degree_max(int var) const {
        int d = INT_MIN;
        for (const auto& [m, c] : terms) d = std::max(d, m.get(var));
        return d;
    }
    int degree_min(int var) const {
        int d = INT_MAX;
        for (const auto& [m, c] : terms) d = std::min(d, m.get(var));
        return d;
    }

    // coefficient of var^power, with the var exponent removed (no q-powers
    // move: a monomial's var factor commutes into place inside normal order)
    SkewElement slice(int var, int power) const {
        SkewElement r(tab);
        for (const auto& [m, c] : terms) {
            if (m.get(var) == power) {
                ExponentVector mm = m;
                mm.set(var, 0);
                r.terms.emplace(std::move(mm), c);
            }
        }
        return r;
    }

    SkewElement constant_term(int var) const { return slice(var, 0); }

    // value at x = y = 0 (keeps params/taus)
    SkewElement at_origin() const {
        SkewElement r(tab);
        for (const auto& [m, c] : terms)
            if (m.get(tab->x_id) == 0 && m.get(tab->y_id) == 0) r.terms.emplace(m, c);
        return r;
    }

    // exact inverse of a single monomial: M * inverse(M) == 1
    static std::pair<ExponentVector, Rat> invert_monomial(const TablePtr& tab,
                                                          const ExponentVector& m,
                                                          const Rat& c) {
        if (c == 0) throw engine_error("inverting zero monomial");
        ExponentVector inv = m.negated();
        long k = -twist(m, inv, *tab);
        Rat ic = Rat(1) / c;
        if (tab->q_value)
            ic *= rat_pow(*tab->q_value, k);
        else
            inv.add(tab->q_id, static_cast<int>(k));
        return {std::move(inv), std::move(ic)};
    }

    SkewElement monomial_inverse() const {
        if (terms.size() != 1) throw engine_error("monomial_inverse on non-monomial");
        auto [m, c] = *terms.begin();
        auto [im, ic] = invert_monomial(tab, m, c);
        return monomial(tab, std::move(im), std::move(ic));
    }

    // monomial substitution on PARAM symbols; rationals untouched
    SkewElement substitute_params(const ParamMap& pm) const {
        SkewElement r(tab);
        for (const auto& [m, c] : terms) {
            ExponentVector nm;
            for (const auto& [id, e] : m.entries) {
                if (const ExponentVector* img = pm.image(id)) {
                    for (const auto& [jid, je] : img->entries) nm.add(jid, e * je);
                } else {
                    nm.add(id, e);
                }
            }
            r.add_term(std::move(nm), c);
        }
        return r;
    }

    // q -> 1: the commutative shadow
    SkewElement classical_limit() const {
        if (tab->q_value) throw engine_error("classical_limit on q-specialized table");
        SkewElement r(tab);
        for (const auto& [m, c] : terms) {
            ExponentVector nm = m;
            nm.set(tab->q_id, 0);
            r.add_term(std::move(nm), c);
        }
        return r;
    }

    // exact evaluation; assignment must cover every symbol that appears
    Rat specialize(const std::map<int, Rat>& assignment) const {
        Rat total(0);
        for (const auto& [m, c] : terms) {
            Rat v = c;
            for (const auto& [id, e] : m.entries) {
                auto it = assignment.find(id);
                if (it == assignment.end())
                    throw engine_error("specialize: no value for symbol " + tab->names[id]);
                if (it->second == 0 && e < 0)
                    throw engine_error("specialize: zero raised to negative power");
                v *= rat_pow(it->second, e);
            }
            total += v;
        }
        return total;
    }
};

// Exactly (1 + coeff*q^shift*mono*var) with var in {x,y} and mono a PARAM
// monomial carrying no q part (the q power lives in shift so factors can be
// matched by key).  On q-specialized tables shift is folded into coeff.
struct LinearFactor {
    int var;
    ExponentVector mono;
    Rat coeff;
    int shift = 0;

    LinearFactor(TablePtr tab, int var_, ExponentVector mono_, Rat coeff_, int shift_ = 0)
        : var(var_), mono(std::move(mono_)), coeff(std::move(coeff_)), shift(shift_) {
        int qe = mono.get(tab->q_id);
        if (qe) {
            mono.set(tab->q_id, 0);
            shift += qe;
        }
        if (tab->q_value) {
            coeff *= rat_pow(*tab->q_value, shift);
            shift = 0;
        }
    }

    SkewElement as_element(const TablePtr& tab) const {
        SkewElement e = SkewElement::one(tab);
        ExponentVector m = mono;
        m.add(var, 1);
        Rat c = coeff;
        if (!tab->q_value) m.add(tab->q_id, shift);
        e.add_term(std::move(m), std::move(c));
        return e;
    }

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
    friend auto operator<=>(const LinearFactor& a, const LinearFactor& b) {
        if (auto c = a.var <=> b.var; c != 0) return c;
        if (auto c = a.mono <=> b.mono; c != 0) return c;
        if (auto c = a.shift <=> b.shift; c != 0) return c;
        return a.coeff < b.coeff   ? std::strong_ordering::less
               : a.coeff == b.coeff ? std::strong_ordering::equal
                                     : std::strong_ordering::greater;
    }
};

namespace detail {

// Q with Q*f = p (right) or f*Q = p (left), f = 1 + u*var.  Ascending in
// the var degree: the bottom slice of p is the bottom slice of Q, and
// Q_j = p_j - (Q_{j-1} * u*var)-slice; the recursion is exact iff the top
// slice cancels.  Works for Laurent degrees and for terms with TAU parts
// (the monomial product tracks the transport twists).
inline std::optional<SkewElement> divide_linear(const SkewElement& p, const LinearFactor& f,
                                                bool from_left) {
    const TablePtr& tab = p.tab;
    if (p.is_zero()) return p;

    ExponentVector um = f.mono;
    um.add(f.var, 1);
    Rat uc = f.coeff;
    if (!tab->q_value) um.add(tab->q_id, f.shift);
    SkewElement uv = SkewElement::monomial(tab, std::move(um), std::move(uc));

    int lo = p.degree_min(f.var);
    int hi = p.degree_max(f.var);
    SkewElement q(tab), carry(tab);
    for (int j = lo; j <= hi; ++j) {
        SkewElement cur(tab);
        for (const auto& [m, c] : p.terms)
            if (m.get(f.var) == j) cur.terms.emplace(m, c);
        cur -= carry;
        if (j == hi) {
            if (!cur.is_zero()) return std::nullopt;
            break;
        }
        carry = from_left ? uv * cur : cur * uv;
        q += cur;
    }
    return q;
}

}  // namespace detail

inline std::optional<SkewElement> try_right_divide(const SkewElement& p, const LinearFactor& f) {
    return detail::divide_linear(p, f, false);
}

inline std::optional<SkewElement> try_left_divide(const SkewElement& p, const LinearFactor& f) {
    return detail::divide_linear(p, f, true);
}

inline SkewElement right_divide_exact(const SkewElement& p, const LinearFactor& f) {
    auto q = try_right_divide(p, f);
    if (!q) throw not_divisible("right division left a remainder");
    return *q;
}

inline SkewElement left_divide_exact(const SkewElement& p, const LinearFactor& f) {
    auto q = try_left_divide(p, f);
    if (!q) throw not_divisible("left division left a remainder");
    return *q;
}

}  // namespace qweyl

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qweyl/element.hpp"
#include "qweyl/lattice.hpp"

namespace qweyl {

// tau^lam = s1^d1 s2^d2 / prod t_i^{m_i}
inline ExponentVector tau_monomial(const SymbolTable& tab, const LatticeVector& lam) {
    ExponentVector v;
    v.set(tab.s1_id, lam.d1);
    v.set(tab.s2_id, lam.d2);
    for (int i = 1; i <= tab.npoints; ++i) v.set(tab.t(i), -lam.m[i - 1]);
    return v;
}

// e^lam = h1^d1 h2^d2 / prod e_i^{m_i}
inline ExponentVector param_monomial(const SymbolTable& tab, const LatticeVector& lam) {
    ExponentVector v;
    v.set(tab.h1_id, lam.d1);
    v.set(tab.h2_id, lam.d2);
    for (int i = 1; i <= tab.npoints; ++i) v.set(tab.e(i), -lam.m[i - 1]);
    return v;
}

inline LatticeVector lattice_of_param(const SymbolTable& tab, const ExponentVector& v) {
    LatticeVector lam = LatticeVector::zero(tab.npoints);
    for (const auto& [id, e] : v.entries) {
        if (id == tab.h1_id)
            lam.d1 = e;
        else if (id == tab.h2_id)
            lam.d2 = e;
        else if (tab.is_e(id))
            lam.m[id - tab.e_base] = -e;
        else
            throw engine_error("monomial is not of the form e^lambda");
    }
    return lam;
}

namespace detail {

struct MonoPiece {
    ExponentVector mono;
    Rat coeff = Rat(1);
};

struct FactorPiece {
    int var;
    ExponentVector mono;  // PARAM monomial, q part lives in shift
    Rat coeff = Rat(1);
    int sign = 1;  // (1 + coeff q^shift mono var)^sign
    long shift = 0;

    friend bool operator==(const FactorPiece&, const FactorPiece&) = default;
    bool key_less(const FactorPiece& o) const {
        if (var != o.var) return var < o.var;
        if (mono != o.mono) return mono < o.mono;
        if (shift != o.shift) return shift < o.shift;
        if (coeff != o.coeff) return coeff < o.coeff;
        return sign < o.sign;
    }
};

using Piece = std::variant<MonoPiece, FactorPiece>;

// coeff * core * (commuting linear factors, all in one variable)
struct Factored {
    Rat coeff = Rat(1);
    ExponentVector core;
    std::vector<FactorPiece> factors;

    void mul_mono(const TablePtr& tab, const ExponentVector& m, const Rat& c) {
        for (auto& f : factors) {
            ExponentVector fm = f.mono;
            fm.add(f.var, 1);
            long d = twist_conj(fm, m, *tab);
            if (d) {
                if (tab->q_value)
                    f.coeff *= rat_pow(*tab->q_value, d);
                else
                    f.shift += d;
            }
        }
        long k = twist(core, m, *tab);
        coeff *= c;
        if (tab->q_value)
            coeff *= rat_pow(*tab->q_value, k);
        else {
            core.add(tab->q_id, static_cast<int>(k));
        }
        core += m;
    }

    void mul_factor(const TablePtr& tab, FactorPiece f) {
        if (tab->q_value && f.shift) {
            f.coeff *= rat_pow(*tab->q_value, f.shift);
            f.shift = 0;
        }
        if (!factors.empty() && factors.front().var != f.var)
            throw engine_error("mixed-variable factor product");
        factors.push_back(std::move(f));
    }

    void mul_piece(const TablePtr& tab, const Piece& p) {
        if (std::holds_alternative<MonoPiece>(p)) {
            const auto& mp = std::get<MonoPiece>(p);
            mul_mono(tab, mp.mono, mp.coeff);
        } else {
            mul_factor(tab, std::get<FactorPiece>(p));
        }
    }
};

inline std::vector<Piece> invert_pieces(const TablePtr& tab, const std::vector<Piece>& ps) {
    std::vector<Piece> out;
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        if (std::holds_alternative<MonoPiece>(*it)) {
            const auto& mp = std::get<MonoPiece>(*it);
            auto [im, ic] = SkewElement::invert_monomial(tab, mp.mono, mp.coeff);
            out.push_back(MonoPiece{std::move(im), std::move(ic)});
        } else {
            FactorPiece f = std::get<FactorPiece>(*it);
            f.sign = -f.sign;
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace detail

// One simple reflection realized as substitution data: a monomial map on
// the parameters and piece lists for the variables it moves.
class GeneratorAction {
  public:
    TablePtr tab;
    Generator gen;
    ParamMap pmap;
    std::map<int, std::vector<detail::Piece>> images;       // symbol id -> pieces
    std::map<int, std::vector<detail::Piece>> inv_images;   // for negative powers

    GeneratorAction(TablePtr tab_, const GroupSpec& spec, int index) : tab(std::move(tab_)) {
        gen = spec.gens.at(index);
        const SymbolTable& t = *tab;
        int ea = t.e(gen.a), eb = t.e(gen.b);
        int ta = t.t(gen.a), tb = t.t(gen.b);
        using detail::FactorPiece;
        using detail::MonoPiece;
        auto mono = [](ExponentVector v) { return detail::Piece(MonoPiece{std::move(v), Rat(1)}); };
        auto fac = [](int var, ExponentVector m, int sign) {
            return detail::Piece(FactorPiece{var, std::move(m), Rat(1), sign, 0});
        };
        switch (gen.kind) {
            case GenKind::Swap: {
                pmap.images[ea] = ev_of(eb);
                pmap.images[eb] = ev_of(ea);
                images[ta] = {mono(ev_of(tb))};
                images[tb] = {mono(ev_of(ta))};
                break;
            }
            case GenKind::XType: {
                // e_a -> h2/e_b, e_b -> h2/e_a, h1 -> h1 h2/(e_a e_b)
                ExponentVector alpha = ev_of(eb);                      // e_b
                ExponentVector beta = ev_of(t.h2_id) + ev_of(ea, -1);  // h2/e_a
                pmap.images[ea] = ev_of(t.h2_id) + ev_of(eb, -1);
                pmap.images[eb] = beta;
                pmap.images[t.h1_id] =
                    ev_of(t.h1_id) + ev_of(t.h2_id) + ev_of(ea, -1) + ev_of(eb, -1);
                images[t.x_id] = {mono(ev_of(t.x_id)), fac(t.y_id, beta, 1), fac(t.y_id, alpha, -1)};
                images[ta] = {fac(t.y_id, alpha, 1), mono(ev_of(t.s2_id) + ev_of(tb, -1))};
                images[tb] = {mono(ev_of(t.s2_id) + ev_of(ta, -1)), fac(t.y_id, beta, 1)};
                images[t.s1_id] = {fac(t.y_id, alpha, 1),
                                   mono(ev_of(t.s1_id) + ev_of(t.s2_id) + ev_of(ta, -1) +
                                        ev_of(tb, -1))};
                break;
            }
            case GenKind::YType: {
                // e_a -> h1/e_b, e_b -> h1/e_a, h2 -> h1 h2/(e_a e_b)
                ExponentVector gamma = ev_of(eb) + ev_of(t.h1_id, -1);  // e_b/h1
                ExponentVector delta = ev_of(ea, -1);                   // 1/e_a
                pmap.images[ea] = ev_of(t.h1_id) + ev_of(eb, -1);
                pmap.images[eb] = ev_of(t.h1_id) + ev_of(ea, -1);
                pmap.images[t.h2_id] =
                    ev_of(t.h1_id) + ev_of(t.h2_id) + ev_of(ea, -1) + ev_of(eb, -1);
                images[t.y_id] = {fac(t.x_id, gamma, 1), fac(t.x_id, delta, -1),
                                  mono(ev_of(t.y_id))};
                images[ta] = {fac(t.x_id, gamma, 1), mono(ev_of(t.s1_id) + ev_of(tb, -1))};
                images[tb] = {mono(ev_of(t.s1_id) + ev_of(ta, -1)), fac(t.x_id, delta, 1)};
                images[t.s2_id] = {mono(ev_of(t.s1_id) + ev_of(t.s2_id) + ev_of(ta, -1) +
                                        ev_of(tb, -1)),
                                   fac(t.x_id, delta, 1)};
                break;
            }
        }
        for (const auto& [id, ps] : images) inv_images[id] = detail::invert_pieces(tab, ps);
    }

    // substitution image of one normal-ordered monomial
    detail::Factored act_monomial(const ExponentVector& m, const Rat& c) const {
        const SymbolTable& t = *tab;
        detail::Factored acc;
        acc.coeff = c;
        // parameters through the monomial map, q and constants fixed
        ExponentVector param_part;
        for (const auto& [id, e] : m.entries) {
            if (!t.is_param_block(id)) continue;
            if (const ExponentVector* img = pmap.image(id)) {
                for (const auto& [jid, je] : img->entries) param_part.add(jid, e * je);
            } else {
                param_part.add(id, e);
            }
        }
        acc.core = std::move(param_part);
        // then tau block and position variables in normal order
        auto apply_power = [&](int id, int e) {
            auto it = images.find(id);
            if (it == images.end()) {
                acc.mul_mono(tab, ev_of(id, e), Rat(1));
                return;
            }
            const auto& ps = e > 0 ? it->second : inv_images.at(id);
            for (int k = 0; k < std::abs(e); ++k)
                for (const auto& p : ps) acc.mul_piece(tab, p);
        };
        for (int id : {t.s1_id, t.s2_id}) {
            if (int e = m.get(id)) apply_power(id, e);
        }
        for (int i = 1; i <= t.npoints; ++i) {
            if (int e = m.get(t.t(i))) apply_power(t.t(i), e);
        }
        if (int e = m.get(t.x_id)) apply_power(t.x_id, e);
        if (int e = m.get(t.y_id)) apply_power(t.y_id, e);
        return acc;
    }
};

namespace detail {

inline ExponentVector apply_param_map(const ParamMap& pm, const ExponentVector& v) {
    ExponentVector out;
    for (const auto& [id, e] : v.entries) {
        if (const ExponentVector* img = pm.image(id)) {
            for (const auto& [jid, je] : img->entries) out.add(jid, e * je);
        } else {
            out.add(id, e);
        }
    }
    return out;
}

}  // namespace detail

// Substitution action of one generator on a sum of monomials.  Positive
// linear factors are expanded; inverse factors are collected per term,
// matched against identical keys, and the remainder is removed by exact
// division (failure means the input was outside the action's polynomial
// domain).  `postmap` reduces every parameter monomial first (used for the
// curve constraint); `post_mult` right-multiplies each pending group before
// dividing (used for cross-multiplied identity checks).
inline SkewElement act_on_element(const GeneratorAction& act, const SkewElement& el,
                                  const ParamMap* postmap = nullptr,
                                  const SkewElement* post_mult = nullptr) {
    const TablePtr& tab = el.tab;
    struct PendingKey {
        std::vector<detail::FactorPiece> fs;
        bool operator<(const PendingKey& o) const {
            return std::lexicographical_compare(
                fs.begin(), fs.end(), o.fs.begin(), o.fs.end(),
                [](const detail::FactorPiece& a, const detail::FactorPiece& b) {
                    return a.key_less(b);
                });
        }
    };
    std::map<PendingKey, SkewElement> groups;

    for (const auto& [m, c] : el.terms) {
        detail::Factored fm = act.act_monomial(m, c);
        if (postmap) {
            fm.core = detail::apply_param_map(*postmap, fm.core);
            for (auto& f : fm.factors) {
                f.mono = detail::apply_param_map(*postmap, f.mono);
                int qe = f.mono.get(tab->q_id);
                if (qe) {
                    f.mono.set(tab->q_id, 0);
                    f.shift += qe;
                }
            }
        }
        // cancel inverse factors against identical keys
        std::vector<detail::FactorPiece> pos, neg;
        for (auto& f : fm.factors) (f.sign > 0 ? pos : neg).push_back(f);
        for (auto& f : neg) f.sign = 1;
        auto key_sort = [](std::vector<detail::FactorPiece>& v) {
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.key_less(b); });
        };
        key_sort(pos);
        key_sort(neg);
        std::vector<detail::FactorPiece> pos2, neg2;
        {
            size_t i = 0, j = 0;
            while (i < pos.size() || j < neg.size()) {
                if (j == neg.size())
                    pos2.push_back(pos[i++]);
                else if (i == pos.size())
                    neg2.push_back(neg[j++]);
                else if (pos[i] == neg[j]) {
                    ++i;
                    ++j;
                } else if (pos[i].key_less(neg[j]))
                    pos2.push_back(pos[i++]);
                else
                    neg2.push_back(neg[j++]);
            }
        }
        SkewElement num = SkewElement::monomial(tab, fm.core, fm.coeff);
        for (const auto& f : pos2) {
            LinearFactor lf(tab, f.var, f.mono, f.coeff, static_cast<int>(f.shift));
            num = num * lf.as_element(tab);
        }
        auto [it, ins] = groups.try_emplace(PendingKey{std::move(neg2)}, tab);
        it->second += num;
    }

    SkewElement result(tab);
    for (auto& [key, num] : groups) {
        SkewElement cur = post_mult ? num * *post_mult : num;
        for (const auto& f : key.fs) {
            LinearFactor lf(tab, f.var, f.mono, f.coeff, static_cast<int>(f.shift));
            cur = right_divide_exact(cur, lf);
        }
        result += cur;
    }
    return result;
}

// F(x,y) * tau^lam with F written entirely to the left of tau^lam
struct TauSection {
    SkewElement F;
    LatticeVector lam;
};

inline SkewElement section_element(const TauSection& s) {
    return s.F.times_monomial(tau_monomial(*s.F.tab, s.lam), Rat(1));
}

inline TauSection act_on_section(const GroupSpec& spec, int i, const TauSection& s,
                                 const ParamMap* postmap = nullptr) {
    const TablePtr& tab = s.F.tab;
    GeneratorAction act(tab, spec, i);
    SkewElement full = act_on_element(act, section_element(s), postmap);
    LatticeVector lam2 = star_action(spec, i, s.lam);
    ExponentVector tmono = tau_monomial(*tab, lam2);
    SkewElement F2(tab);
    for (const auto& [m, c] : full.terms) {
        ExponentVector rest;
        ExponentVector taus;
        for (const auto& [id, e] : m.entries) {
            if (tab->is_tau_block(id))
                taus.add(id, e);
            else
                rest.add(id, e);
        }
        if (!(taus == tmono))
            throw engine_error("section image has unexpected tau monomial");
        F2.add_term(std::move(rest), c);
    }
    return {std::move(F2), std::move(lam2)};
}

// divide by F(0,0) (or the boundary-class slope when F(0,0) = 0); a
// non-monomial value is an error rather than a guess
inline void normalize_section(TauSection& s) {
    const TablePtr& tab = s.F.tab;
    SkewElement c = s.F.at_origin();
    if (c.is_zero()) {
        SkewElement cx = s.F.slice(tab->x_id, 1).constant_term(tab->y_id);
        if (cx.is_zero()) cx = s.F.slice(tab->y_id, 1).constant_term(tab->x_id);
        c = cx;
    }
    if (c.is_zero() || !c.is_single_monomial())
        throw engine_error("section normalization needs a single-monomial leading value");
    const auto& [m, v] = *c.terms.begin();
    if (m.empty() && v == 1) return;
    s.F = c.monomial_inverse() * s.F;
}

inline TauSection apply_word(const GroupSpec& spec, const std::vector<int>& word, TauSection s,
                             const ParamMap* postmap = nullptr) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        s = act_on_section(spec, *it, s, postmap);
    return s;
}

inline SkewElement act_on_parameters(const GroupSpec& spec, int i, const SkewElement& c) {
    GeneratorAction act(c.tab, spec, i);
    return c.substitute_params(act.pmap);
}

inline SkewElement apply_word_params(const GroupSpec& spec, const std::vector<int>& word,
                                     SkewElement c) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) c = act_on_parameters(spec, *it, c);
    return c;
}

inline SkewElement apply_word_element(const GroupSpec& spec, const std::vector<int>& word,
                                      SkewElement el, const ParamMap* postmap = nullptr) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        GeneratorAction act(el.tab, spec, *it);
        el = act_on_element(act, el, postmap);
    }
    return el;
}

// seed section (1, E_i), i.e. the tau variable itself
inline TauSection tau_seed(const TablePtr& tab, int i) {
    return {SkewElement::one(tab), LatticeVector::E(tab->npoints, i)};
}

inline TauSection construct_via_weyl(const GroupSpec& spec, const std::vector<int>& word,
                                     int seed_index, const TablePtr& tab) {
    TauSection s = apply_word(spec, word, tau_seed(tab, seed_index));
    normalize_section(s);
    return s;
}

// E8 invariants k1 = x tau10/tau11, k2 = y tau7 tau8 tau9/(tau1...tau6)
inline SkewElement k1_invariant(const TablePtr& tab) {
    ExponentVector m;
    m.set(tab->t(10), 1);
    m.set(tab->t(11), -1);
    m.set(tab->x_id, 1);
    return SkewElement::monomial(tab, std::move(m));
}

inline SkewElement k2_invariant(const TablePtr& tab) {
    ExponentVector m;
    for (int i = 1; i <= 6; ++i) m.set(tab->t(i), -1);
    for (int i = 7; i <= 9; ++i) m.set(tab->t(i), 1);
    m.set(tab->y_id, 1);
    return SkewElement::monomial(tab, std::move(m));
}

}  // namespace qweyl

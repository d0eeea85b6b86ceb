#pragma once

#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

// Formal series over the skew algebra, truncated by joint total degree in a
// chosen set of variables (x and y by default).
class TruncatedSeries {
  public:
    SkewElement el;
    int order = 0;
    std::vector<int> vars;

    TruncatedSeries() = default;

    static TruncatedSeries make(SkewElement e, int order, std::vector<int> vars = {}) {
        TruncatedSeries s;
        s.order = order;
        s.vars = vars.empty() ? std::vector<int>{e.tab->x_id, e.tab->y_id} : std::move(vars);
        s.el = SkewElement(e.tab);
        for (const auto& [m, c] : e.terms)
            if (s.degree_of(m) <= order) s.el.terms.emplace(m, c);
        return s;
    }

    int degree_of(const ExponentVector& m) const {
        int d = 0;
        for (int v : vars) d += std::max(m.get(v), 0);
        return d;
    }

    TruncatedSeries truncated(int new_order) const {
        return make(el, std::min(new_order, order), vars);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order != b.order) throw engine_error("series order mismatch");
        return make(a.el * b.el, a.order, a.vars);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return make(a.el + b.el, std::min(a.order, b.order), a.vars);
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return make(a.el - b.el, std::min(a.order, b.order), a.vars);
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.el == b.el;
    }

    // formal inverse; the degree-zero part must be a single invertible monomial
    TruncatedSeries inverse() const {
        const TablePtr& tab = el.tab;
        SkewElement c0(tab);
        std::map<int, SkewElement> graded;
        for (const auto& [m, c] : el.terms) {
            int d = degree_of(m);
            auto [it, ins] = graded.try_emplace(d, tab);
            it->second.add_term(m, c);
        }
        auto g0 = graded.find(0);
        if (g0 == graded.end() || !g0->second.is_single_monomial())
            throw engine_error("series inverse needs a monomial constant term");
        SkewElement inv0 = g0->second.monomial_inverse();
        std::map<int, SkewElement> binv;
        binv.emplace(0, inv0);
        for (int k = 1; k <= order; ++k) {
            SkewElement acc(tab);
            for (int j = 0; j < k; ++j) {
                auto ai = graded.find(k - j);
                if (ai == graded.end()) continue;
                acc += ai->second * binv.at(j);
            }
            binv.emplace(k, -(inv0 * acc));
        }
        SkewElement out(tab);
        for (auto& [d, e] : binv) out += e;
        return make(std::move(out), order, vars);
    }
};

// finite product prod_{i=0}^{order} (1 + q^i z), z a monomial times a
// variable power; symbolic in q
inline TruncatedSeries q_factorial_series(const TablePtr& tab, const ExponentVector& z, Rat coeff,
                                          int order, std::vector<int> vars = {}) {
    SkewElement acc = SkewElement::one(tab);
    for (int i = 0; i <= order; ++i) {
        ExponentVector m = z;
        Rat c = coeff;
        if (tab->q_value)
            c *= rat_pow(*tab->q_value, i);
        else
            m.add(tab->q_id, i);
        acc = acc * (SkewElement::one(tab) + SkewElement::monomial(tab, std::move(m), std::move(c)));
        acc = TruncatedSeries::make(acc, order, vars).el;
    }
    return TruncatedSeries::make(std::move(acc), order, std::move(vars));
}

// (u v ; q)+_inf / (w v ; q)+_inf as an exact series via the q-difference
// recursion c_n (q^n - 1) = c_{n-1}(1 - (u/w) q^{n-1}); needs q specialized
inline TruncatedSeries ratio_series_plus(const TablePtr& tab, const SkewElement& num,
                                         const SkewElement& den, int order,
                                         std::vector<int> vars = {}) {
    if (!tab->q_value) throw engine_error("ratio series needs a specialized q");
    if (!num.is_single_monomial() || !den.is_single_monomial())
        throw engine_error("ratio series takes monomial arguments");
    Rat qv = *tab->q_value;
    SkewElement a = num * den.monomial_inverse();  // param-only ratio
    SkewElement cn = SkewElement::one(tab);
    SkewElement acc = SkewElement::one(tab);
    SkewElement wpow = SkewElement::one(tab);
    Rat qn(1);
    for (int n = 1; n <= order; ++n) {
        qn *= qv;
        cn = cn * (SkewElement::one(tab) - a * rat_pow(qv, n - 1)) * (Rat(1) / (qn - 1));
        wpow = wpow * den;
        acc += cn * wpow;
    }
    return TruncatedSeries::make(std::move(acc), order, std::move(vars));
}

// minus convention (z;q)_inf = prod (1 - q^i z), Euler's expansion; exact at
// specialized q
inline TruncatedSeries euler_series_minus(const TablePtr& tab, const SkewElement& z, int order,
                                          std::vector<int> vars = {}) {
    if (!tab->q_value) throw engine_error("euler series needs a specialized q");
    Rat qv = *tab->q_value;
    SkewElement acc = SkewElement::one(tab);
    SkewElement zpow = SkewElement::one(tab);
    Rat coef(1);
    Rat qpoch(1);  // (q;q)_n
    Rat qn(1);
    for (int n = 1; n <= order; ++n) {
        qn *= qv;
        qpoch *= (Rat(1) - qn);
        zpow = zpow * z;
        // (-1)^n q^{n(n-1)/2} / (q;q)_n
        coef = rat_pow(qv, n - 1) * coef;  // accumulates q^{0+1+...+(n-1)}
        Rat c = coef * Rat((n % 2) ? -1 : 1) / qpoch;
        acc += zpow * c;
    }
    return TruncatedSeries::make(std::move(acc), order, std::move(vars));
}

// minus convention ratio (az)_inf/(z)_inf via the same difference equation
inline TruncatedSeries ratio_series_minus(const TablePtr& tab, const SkewElement& num,
                                          const SkewElement& den, int order,
                                          std::vector<int> vars = {}) {
    if (!tab->q_value) throw engine_error("ratio series needs a specialized q");
    Rat qv = *tab->q_value;
    SkewElement a = num * den.monomial_inverse();
    SkewElement cn = SkewElement::one(tab);
    SkewElement acc = SkewElement::one(tab);
    SkewElement wpow = SkewElement::one(tab);
    Rat qn(1);
    for (int n = 1; n <= order; ++n) {
        qn *= qv;
        cn = cn * (a * rat_pow(qv, n - 1) - SkewElement::one(tab)) * (Rat(1) / (qn - 1));
        wpow = wpow * den;
        acc += cn * wpow;
    }
    return TruncatedSeries::make(std::move(acc), order, std::move(vars));
}

// finite minus-convention factorial (z;q)_n
inline SkewElement finite_factorial_minus(const TablePtr& tab, const SkewElement& z, int n) {
    if (!tab->q_value) throw engine_error("finite factorial needs a specialized q");
    Rat qv = *tab->q_value;
    SkewElement acc = SkewElement::one(tab);
    for (int k = 0; k < n; ++k) acc = acc * (SkewElement::one(tab) - z * rat_pow(qv, k));
    return acc;
}

}  // namespace qweyl

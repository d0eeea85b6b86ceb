#pragma once

#include <sstream>
#include <string>

#include "qweyl/fpoly.hpp"

namespace qweyl {

inline std::string pretty_rat(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string pretty_monomial(const TablePtr& tab, const ExponentVector& m, const Rat& c) {
    std::ostringstream os;
    bool lead = true;
    if (c != 1 || m.empty()) {
        os << pretty_rat(c);
        lead = false;
    }
    for (const auto& [id, e] : m.entries) {
        if (!lead) os << " ";
        lead = false;
        os << tab->names[id];
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

inline std::string pretty_element(const SkewElement& el) {
    if (el.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : el.terms) {
        Rat v = c;
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        } else if (v < 0) {
            os << "-";
            v = -v;
        }
        first = false;
        os << pretty_monomial(el.tab, m, v);
    }
    return os.str();
}

inline std::string pretty_factor(const TablePtr& tab, const LinearFactor& f) {
    std::ostringstream os;
    ExponentVector m = f.mono;
    if (!tab->q_value && f.shift) m.add(tab->q_id, f.shift);
    os << "(1 + " << pretty_monomial(tab, m, f.coeff) << " " << tab->names[f.var] << ")";
    return os.str();
}

// Section printer in factored shape: per x-power, peel the boundary
// factors the class prescribes and print the residual polynomial expanded.
inline std::string pretty_section(const GroupSpec& spec, const TauSection& s) {
    const TablePtr& tab = s.F.tab;
    std::ostringstream os;
    os << "lambda = (" << s.lam.d1 << "," << s.lam.d2 << ";";
    for (size_t i = 0; i < s.lam.m.size(); ++i) os << (i ? "," : " ") << s.lam.m[i];
    os << ")\nF =";
    bool wrote = false;
    int top = s.F.is_zero() ? 0 : s.F.degree_max(tab->x_id);
    for (int i = 0; i <= top; ++i) {
        SkewElement A = s.F.slice(tab->x_id, i);
        if (A.is_zero()) continue;
        os << (wrote ? "\n  + " : " ");
        wrote = true;
        if (i > 0) os << "x^" << i << " ";
        std::vector<std::string> peeled;
        for (const auto& f : x_slice_factors(spec, tab, s.lam, i)) {
            if (auto q = try_right_divide(A, f)) {
                A = *q;
                peeled.push_back(pretty_factor(tab, f));
            }
        }
        for (const auto& p : peeled) os << p << " ";
        os << "[" << pretty_element(A) << "]";
    }
    if (!wrote) os << " 0";
    return os.str();
}

}  // namespace qweyl

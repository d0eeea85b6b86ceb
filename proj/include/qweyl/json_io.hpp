#pragma once

#include <json.hpp>

#include "qweyl/lattice.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

using Json = nlohmann::ordered_json;

// Coefficient: list of {exponents, numerator, denominator}, term order is the
// canonical exponent-vector order so identical values serialize identically
inline Json coefficient_to_json(const SkewElement& c) {
    Json terms = Json::array();
    for (const auto& [m, v] : c.terms) {
        Json exps = Json::object();
        for (const auto& [id, e] : m.entries) exps[c.tab->names[id]] = e;
        terms.push_back({{"exponents", exps},
                         {"numerator", v.get_num().get_str()},
                         {"denominator", v.get_den().get_str()}});
    }
    return terms;
}

// SkewElement: list of {tau, x, y, coeff} grouped by (tau part, x, y)
inline Json element_to_json(const SkewElement& el) {
    const TablePtr& tab = el.tab;
    std::map<std::tuple<ExponentVector, int, int>, SkewElement> groups;
    for (const auto& [m, c] : el.terms) {
        ExponentVector taus, params;
        int xe = 0, ye = 0;
        for (const auto& [id, e] : m.entries) {
            if (tab->is_tau_block(id))
                taus.add(id, e);
            else if (id == tab->x_id)
                xe = e;
            else if (id == tab->y_id)
                ye = e;
            else
                params.add(id, e);
        }
        auto [it, ins] = groups.try_emplace({std::move(taus), xe, ye}, tab);
        it->second.add_term(std::move(params), c);
    }
    Json out = Json::array();
    for (const auto& [key, coeff] : groups) {
        const auto& [taus, xe, ye] = key;
        Json tau = Json::object();
        for (const auto& [id, e] : taus.entries) tau[tab->names[id]] = e;
        out.push_back({{"tau", tau}, {"x", xe}, {"y", ye}, {"coeff", coefficient_to_json(coeff)}});
    }
    return out;
}

inline Json lattice_to_json(const LatticeVector& lam) {
    return {{"d", {lam.d1, lam.d2}}, {"m", lam.m}};
}

inline LatticeVector lattice_from_json(const Json& j, int n) {
    LatticeVector lam = LatticeVector::zero(n);
    lam.d1 = j.at("d").at(0).get<int>();
    lam.d2 = j.at("d").at(1).get<int>();
    auto m = j.at("m").get<std::vector<int>>();
    if (static_cast<int>(m.size()) != n) throw engine_error("lattice vector of wrong length");
    lam.m = std::move(m);
    return lam;
}

inline Json section_to_json(const TauSection& s) {
    return {{"lambda", lattice_to_json(s.lam)}, {"F", element_to_json(s.F)}};
}

inline SkewElement element_from_json(const TablePtr& tab, const Json& j) {
    SkewElement el(tab);
    for (const auto& term : j) {
        ExponentVector m;
        if (term.contains("tau"))
            for (auto it = term["tau"].begin(); it != term["tau"].end(); ++it)
                m.add(tab->id_of(it.key()), it.value().get<int>());
        if (term.contains("x")) m.add(tab->x_id, term["x"].get<int>());
        if (term.contains("y")) m.add(tab->y_id, term["y"].get<int>());
        for (const auto& ct : term.at("coeff")) {
            ExponentVector mm = m;
            for (auto it = ct.at("exponents").begin(); it != ct.at("exponents").end(); ++it)
                mm.add(tab->id_of(it.key()), it.value().get<int>());
            el.add_term(std::move(mm),
                        rat_from_strings(ct.at("numerator").get<std::string>(),
                                         ct.at("denominator").get<std::string>()));
        }
    }
    return el;
}

}  // namespace qweyl

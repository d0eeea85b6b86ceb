#include "doctest.h"
#include "helpers.hpp"
#include "qweyl/curves.hpp"

using namespace qweyl;
using qt::c1;
using qt::mono;
using qt::sym;

TEST_CASE("invariant classes are fixed by every generator") {
    for (auto t : {GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5})
        CHECK(curve_class_fixed(t));
}

TEST_CASE("printed E8 slices come out of the builder") {
    auto tab = curve_table(GroupType::E8);
    auto P = build_explicit_curve(tab, GroupType::E8);
    // with c0 = 1, c1 = 0 slice: y^0 is prod (1 + x/(q e_i))
    std::map<int, Rat> fix;
    auto C0 = P.slice(tab->y_id, 0);
    SkewElement expect0 = sym(tab, "c0");
    for (int i = 1; i <= 6; ++i)
        expect0 = expect0 *
                  (c1(tab) + mono(tab, {{"q", -1}, {("e" + std::to_string(i)).c_str(), -1}}) *
                                 sym(tab, "x"));
    CHECK(C0 == expect0);
    // y^3 slice: q^3 e11^3 prod (1 + e_i/h1 x)(1 + q e_i/h1 x)
    auto C3 = P.slice(tab->y_id, 3);
    SkewElement expect3 = sym(tab, "c0") * mono(tab, {{"q", 3}, {"e11", 3}});
    for (int i = 7; i <= 9; ++i) {
        std::string ei = "e" + std::to_string(i);
        auto base = SkewElement::monomial(tab, ev_of(tab->id_of(ei)) + ev_of(tab->h1_id, -1));
        expect3 = expect3 * (c1(tab) + base * sym(tab, "x")) *
                  (c1(tab) + sym(tab, "q") * base * sym(tab, "x"));
    }
    CHECK(C3 == expect3);
    // classical limit collapses [3]_q: constant-in-x part of the y^1 slice is 3 e11
    auto C1cl = P.slice(tab->y_id, 1).slice(tab->x_id, 0).classical_limit();
    CHECK(C1cl == Rat(3) * sym(tab, "c0") * sym(tab, "e11"));
}

TEST_CASE("curve conditions hold modulo the constraint") {
    for (auto t : {GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5}) {
        auto tab = curve_table(t);
        auto elim = elimination_map(tab, t);
        auto P = build_explicit_curve(tab, t);
        const auto& spec = GroupSpec::get(t);
        CHECK(check_conditions(spec, spec.curve_class, P, &elim).pass);
        // unreduced, the x-side factorizations genuinely fail
        if (t == GroupType::D5) CHECK(!check_conditions(spec, spec.curve_class, P).pass);
    }
}

TEST_CASE("constraint reduction is idempotent and commutes with the action") {
    auto tab = curve_table(GroupType::E8);
    auto elim = elimination_map(tab, GroupType::E8);
    const auto& spec = GroupSpec::get(GroupType::E8);
    auto v = mono(tab, {{"e1", 3}, {"h1", -1}, {"e7", 2}}) + mono(tab, {{"e1", -2}, {"h2", 1}});
    auto once = v.substitute_params(elim);
    CHECK(once.substitute_params(elim) == once);
    for (size_t i = 0; i < spec.gens.size(); ++i) {
        auto a = act_on_parameters(spec, static_cast<int>(i), v).substitute_params(elim);
        auto b = act_on_parameters(spec, static_cast<int>(i), once).substitute_params(elim);
        CHECK(a == b);
    }
}

TEST_CASE("solution space of the invariant class") {
    std::mt19937_64 rng(808);
    for (auto t : {GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5}) {
        auto chk = verify_curve_space(t, rng);
        CHECK(chk.class_fixed);
        CHECK(chk.conditions);
        CHECK(chk.dim_constrained);
        CHECK(chk.dim_free);
        CHECK(chk.basis_spans);
        CHECK(chk.aux_root);
    }
}

TEST_CASE("section-level Weyl invariance of the curves") {
    for (auto t : {GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5}) {
        auto failures = verify_curve_invariance(t);
        if (!failures.empty()) {
            for (const auto& f : failures) MESSAGE(group_name(t), ": ", f);
        }
        CHECK(failures.empty());
    }
}

TEST_CASE("direct cross-multiplied s0 covariance for E8") {
    CHECK(verify_e8_hinv_s0());
}

TEST_CASE("classical limit of each curve matches the q=1 build") {
    for (auto t : {GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5}) {
        auto tab = curve_table(t);
        auto tab1 = curve_table(t, Rat(1));
        auto lim = build_explicit_curve(tab, t).classical_limit();
        auto at_one = build_explicit_curve(tab1, t);
        SkewElement moved(tab1);
        for (const auto& [m, c] : lim.terms) moved.add_term(m, c);
        CHECK(moved == at_one);
    }
}

TEST_CASE("curve boundary runs satisfy the non-log factor checks") {
    auto tab = curve_table(GroupType::E8);
    const auto& spec = GroupSpec::get(GroupType::E8);
    auto elim = elimination_map(tab, GroupType::E8);
    auto P = build_explicit_curve(tab, GroupType::E8).substitute_params(elim);
    int checked = 0;
    for (auto q : nonlog_queries(spec, tab, spec.curve_class)) {
        q.base = qweyl::detail::apply_param_map(elim, q.base);
        CHECK(check_nonlog(P, q).pass);
        ++checked;
    }
    CHECK(checked == 11);  // 6 + 3 point families plus the two h-families
}

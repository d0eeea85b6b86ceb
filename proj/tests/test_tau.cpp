#include "doctest.h"
#include "helpers.hpp"
#include "qweyl/fpoly.hpp"
#include "qweyl/tau.hpp"

using namespace qweyl;
using qt::c1;
using qt::mono;
using qt::sym;

namespace {

TablePtr e8() { return SymbolTable::make(GroupType::E8); }

LatticeVector cls(int n, std::initializer_list<std::pair<int, int>> hs,
                  std::initializer_list<std::pair<int, int>> ms) {
    LatticeVector v = LatticeVector::zero(n);
    for (auto [h, e] : hs) (h == 1 ? v.d1 : v.d2) += e;
    for (auto [i, m] : ms) v.m[i - 1] += m;
    return v;
}

SkewElement strip_tau(const SkewElement& el, const LatticeVector& lam) {
    const TablePtr& tab = el.tab;
    ExponentVector tmono = tau_monomial(*tab, lam);
    SkewElement out(tab);
    for (const auto& [m, c] : el.terms) {
        ExponentVector rest, taus;
        for (const auto& [id, e] : m.entries)
            (tab->is_tau_block(id) ? taus : rest).add(id, e);
        REQUIRE(taus == tmono);
        out.add_term(std::move(rest), c);
    }
    return out;
}

}  // namespace

TEST_CASE("transported tau values match the printed table") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    auto y = sym(tab, "y"), x = sym(tab, "x");

    auto t_h2e10 = ev.get(cls(11, {{2, 1}}, {{10, 1}}));
    CHECK(t_h2e10.F == c1(tab) + mono(tab, {{"q", -1}, {"h2", 1}, {"e10", -1}}) * y);
    auto t_h2e11 = ev.get(cls(11, {{2, 1}}, {{11, 1}}));
    CHECK(t_h2e11.F == c1(tab) + sym(tab, "e11") * y);
    auto t_h1e10 = ev.get(cls(11, {{1, 1}}, {{10, 1}}));
    CHECK(t_h1e10.F == c1(tab));
    auto t_h1e11 = ev.get(cls(11, {{1, 1}}, {{11, 1}}));
    CHECK(t_h1e11.F == x);

    // tau(h1 h2/(e7 e10 e11)) = {1 + e11 y + (e7 e10 e11/h1 h2) x (1 + h2/e10 y)} ...
    auto big = ev.get(cls(11, {{1, 1}, {2, 1}}, {{7, 1}, {10, 1}, {11, 1}}));
    auto expect = c1(tab) + sym(tab, "e11") * y +
                  mono(tab, {{"e7", 1}, {"e10", 1}, {"e11", 1}, {"h1", -1}, {"h2", -1}}) * x *
                      (c1(tab) + mono(tab, {{"h2", 1}, {"e10", -1}}) * y);
    CHECK(big.F == expect);

    // evaluate via an explicit word: s0 transports h1/e7 there
    auto viaword = ev.evaluate_with_word(big.lam, {0, 3});
    CHECK(viaword.F == big.F);
    CHECK_THROWS(ev.evaluate_with_word(big.lam, {1}));
}

TEST_CASE("empty word evaluates a seed to itself") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    auto t7 = ev.evaluate_with_word(LatticeVector::E(11, 7), {});
    CHECK(t7.F == c1(tab));
    CHECK(section_element(t7) == sym(tab, "t7"));
}

TEST_CASE("tau-variable form of the nontrivial reflections") {
    // with t_{1,10} = s1/t10, t_{1,11} = x s1/t11, t_{2,1} = y s2/t1,
    // t_{2,7} = s2/t7 the reflections act by two-term tau combinations
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    auto t = [&](int i) { return sym(tab, "t" + std::to_string(i)); };
    auto t27 = mono(tab, {{"s2", 1}, {"t7", -1}});
    auto t21 = mono(tab, {{"y", 1}, {"s2", 1}, {"t1", -1}});
    auto t110 = mono(tab, {{"s1", 1}, {"t10", -1}});
    auto t111 = mono(tab, {{"x", 1}, {"s1", 1}, {"t11", -1}});

    auto s0_t10 = section_element(act_on_section(spec, 0, tau_seed(tab, 10)));
    CHECK(s0_t10 == (t27 * t(7) + sym(tab, "e11") * t21 * t(1)) * t(11).monomial_inverse());
    auto s0_t11 = section_element(act_on_section(spec, 0, tau_seed(tab, 11)));
    CHECK(s0_t11 ==
          t(10).monomial_inverse() * (t27 * t(7) + mono(tab, {{"h2", 1}, {"e10", -1}}) * t21 * t(1)));
    auto s3_t1 = section_element(act_on_section(spec, 3, tau_seed(tab, 1)));
    CHECK(s3_t1 == (t110 * t(10) + mono(tab, {{"e7", 1}, {"h1", -1}}) * t111 * t(11)) *
                       t(7).monomial_inverse());
    auto s3_t7 = section_element(act_on_section(spec, 3, tau_seed(tab, 7)));
    CHECK(s3_t7 == t(1).monomial_inverse() *
                       (t110 * t(10) + mono(tab, {{"e1", -1}}) * t111 * t(11)));
    // the swap rows that touch the combined variables
    GeneratorAction s2(tab, spec, 2);
    CHECK(act_on_element(s2, t27) == t(7) * t27 * t(8).monomial_inverse());
    GeneratorAction s4(tab, spec, 4);
    CHECK(act_on_element(s4, t21) == t(1) * t21 * t(2).monomial_inverse());
}

TEST_CASE("transport consistency across the cached lattice") {
    // every cached value must map onto the cached value of its image class:
    // the system has one consistent solution regardless of derivation path
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    auto seeds = tau_seed_classes(11);
    std::set<LatticeVector> classes(seeds.begin(), seeds.end());
    for (int round = 0; round < 2; ++round) {
        std::set<LatticeVector> next = classes;
        for (const auto& lam : classes)
            for (size_t g = 0; g < spec.gens.size(); ++g)
                next.insert(star_action(spec, static_cast<int>(g), lam));
        classes = std::move(next);
    }
    int checked = 0;
    for (const auto& lam : classes) {
        auto val = ev.get(lam);
        for (size_t g = 0; g < spec.gens.size(); ++g) {
            auto img = act_on_section(spec, static_cast<int>(g), val);
            normalize_section(img);
            auto expect = ev.get(star_action(spec, static_cast<int>(g), lam));
            CHECK(img.F == expect.F);
            ++checked;
        }
    }
    CHECK(checked > 250);
}

TEST_CASE("all seed relations hold exactly") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    auto rels = seed_relations(tab);
    CHECK(rels.size() == 36 + 6 + 3 + 5 + 2);
    for (const auto& r : rels) {
        CAPTURE(r.label);
        CHECK(r.lattice_balanced());
        CHECK(verify_relation(ev, r));
    }
}

TEST_CASE("the printed s0 transport of family 4 with j=7") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    // transport by s0
    for (const auto& r : seed_relations(tab)) {
        if (r.label != "family4 j=7") continue;
        auto moved = transport_relation(spec, {0}, r);
        // lhs: tau(h1 h2/(e7 e10 e11)) tau(e7), coefficient of the first rhs
        // term is e7 e10 e11/(h1 h2)
        CHECK(moved.lhs.mu == cls(11, {{1, 1}, {2, 1}}, {{7, 1}, {10, 1}, {11, 1}}));
        CHECK(moved.lhs.nu == LatticeVector::E(11, 7));
        CHECK(moved.rhs[0].coeff ==
              mono(tab, {{"e7", 1}, {"e10", 1}, {"e11", 1}, {"h1", -1}, {"h2", -1}}));
        CHECK(moved.rhs[0].mu == cls(11, {{1, 1}}, {{11, 1}}));
        CHECK(moved.rhs[0].nu == cls(11, {{2, 1}}, {{10, 1}}));
        CHECK(moved.rhs[1].mu == cls(11, {{1, 1}}, {{10, 1}}));
        CHECK(moved.rhs[1].nu == cls(11, {{2, 1}}, {{11, 1}}));
        CHECK(verify_relation(ev, moved));
        // every term of the transported relation lives in the two-parameter
        // family class h1 h2/(e10 e11)
        LatticeVector family = cls(11, {{1, 1}, {2, 1}}, {{10, 1}, {11, 1}});
        auto term_checks = {moved.lhs, moved.rhs[0], moved.rhs[1]};
        for (const auto& t : term_checks) {
            CHECK(t.mu + t.nu == family);
            auto val = section_element(ev.get(t.mu)) * section_element(ev.get(t.nu));
            auto F = strip_tau(val, family);
            CHECK(check_conditions(spec, family, F).pass);
        }
    }
}

TEST_CASE("random Weyl transports of the seed relations") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    auto rels = seed_relations(tab);
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> pick_rel(0, static_cast<int>(rels.size()) - 1);
    std::uniform_int_distribution<int> pick_gen(0, static_cast<int>(spec.gens.size()) - 1);
    std::uniform_int_distribution<int> pick_len(1, 4);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<int> word;
        for (int k = pick_len(rng); k > 0; --k) word.push_back(pick_gen(rng));
        auto moved = transport_relation(spec, word, rels[pick_rel(rng)]);
        CAPTURE(moved.label);
        CHECK(verify_relation(ev, moved));
    }
}

TEST_CASE("Hirota-Miwa forms") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);
    CHECK(verify_hirota_triple(ev, 1, 2, 3));
    CHECK(verify_hirota_second(ev));
    CHECK(verify_hirota_triple(ev, 1, 2, 4));
    CHECK(verify_hirota_triple(ev, 2, 5, 6));
}

TEST_CASE("path consistency and seed fitting") {
    auto tab = e8();
    const auto& spec = GroupSpec::get(GroupType::E8);
    TauEvaluator ev(tab, spec);

    // independent derivation paths to the same class agree
    auto target = cls(11, {{1, 1}, {2, 1}}, {{7, 1}, {10, 1}, {11, 1}});
    auto a = ev.evaluate_with_word(target, {0, 3});
    auto b = ev.evaluate_with_word(target, {3, 0, 3});
    auto c = ev.evaluate_with_word(target, {0, 3, 0});
    CHECK(a.F == b.F);
    CHECK(a.F == c.F);

    // arbitrary nonzero rational seed targets are matched by a choice of the
    // 15 variables, pinning every transported value
    std::mt19937_64 rng(1234);
    qt::RatSampler sampler(4321);
    std::map<LatticeVector, Rat> targets;
    for (const auto& lam : tau_seed_classes(11)) targets[lam] = sampler.next();
    auto sp = random_specialization(tab, rng);
    std::map<int, Rat> asg = sp.values;
    for (int i = 1; i <= 11; ++i) asg[tab->t(i)] = targets.at(LatticeVector::E(11, i));
    asg[tab->s1_id] = targets.at(cls(11, {{1, 1}}, {{10, 1}})) * asg[tab->t(10)];
    asg[tab->x_id] =
        targets.at(cls(11, {{1, 1}}, {{11, 1}})) * asg[tab->t(11)] / asg[tab->s1_id];
    asg[tab->s2_id] = targets.at(cls(11, {{2, 1}}, {{7, 1}})) * asg[tab->t(7)];
    asg[tab->y_id] = targets.at(cls(11, {{2, 1}}, {{1, 1}})) * asg[tab->t(1)] / asg[tab->s2_id];
    for (const auto& [lam, want] : targets) {
        CHECK(section_element(tau_seed_value(tab, lam)).specialize(asg) == want);
    }
    // and the relations keep holding under the fitted specialization
    int count = 0;
    for (const auto& r : seed_relations(tab)) {
        SkewElement lhs = bilinear_term_value(ev, r.lhs);
        SkewElement rhs(tab);
        for (const auto& t : r.rhs) rhs += bilinear_term_value(ev, t);
        CHECK(lhs.specialize(asg) == rhs.specialize(asg));
        if (++count >= 10) break;
    }
}

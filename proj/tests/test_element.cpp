#include "doctest.h"
#include "helpers.hpp"

using namespace qweyl;
using qt::c1;
using qt::mono;
using qt::sym;

static TablePtr e8() { return SymbolTable::make(GroupType::E8); }

TEST_CASE("commutation relations of the skew field") {
    auto tab = e8();
    auto x = sym(tab, "x"), y = sym(tab, "y"), q = sym(tab, "q");
    CHECK(y * x == q * x * y);
    CHECK(sym(tab, "t1") * sym(tab, "e1") ==
          mono(tab, {{"q", -1}}) * sym(tab, "e1") * sym(tab, "t1"));
    CHECK(sym(tab, "s1") * sym(tab, "h2") == q * sym(tab, "h2") * sym(tab, "s1"));
    CHECK(sym(tab, "s2") * sym(tab, "h1") == q * sym(tab, "h1") * sym(tab, "s2"));
    // pairs outside the listed relations commute
    CHECK(sym(tab, "e5") * x == x * sym(tab, "e5"));
    CHECK(sym(tab, "t3") * sym(tab, "e4") == sym(tab, "e4") * sym(tab, "t3"));
    CHECK(sym(tab, "s1") * sym(tab, "h1") == sym(tab, "h1") * sym(tab, "s1"));
    CHECK(sym(tab, "t2") * y == y * sym(tab, "t2"));
}

TEST_CASE("twist bilinearity on small exponents") {
    auto tab = e8();
    std::vector<ExponentVector> probes;
    for (int ea : {-2, 0, 1})
        for (int ta : {-1, 0, 2})
            for (int xa : {0, 1})
                for (int ya : {-1, 0, 1}) {
                    ExponentVector v;
                    v.add(tab->id_of("e1"), ea);
                    v.add(tab->id_of("t1"), ta);
                    v.add(tab->x_id, xa);
                    v.add(tab->y_id, ya);
                    probes.push_back(v);
                }
    for (const auto& a : probes)
        for (const auto& b : probes)
            for (const auto& c : probes) {
                CHECK(twist(a, b + c, *tab) == twist(a, b, *tab) + twist(a, c, *tab));
                CHECK(twist(a + b, c, *tab) == twist(a, c, *tab) + twist(b, c, *tab));
            }
}

TEST_CASE("multiplication agrees with the transposition oracle and associates") {
    auto tab = e8();
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> pick(0, tab->size() - 1);
    auto random_mono = [&]() {
        ExponentVector v;
        for (int k = 0; k < 4; ++k) v.add(pick(rng), exp(rng));
        return v;
    };
    for (int trial = 0; trial < 200; ++trial) {
        ExponentVector a = random_mono(), b = random_mono();
        auto ea = SkewElement::monomial(tab, a);
        auto eb = SkewElement::monomial(tab, b);
        auto prod = ea * eb;
        auto [om, oq] = qt::oracle_multiply(tab, a, b);
        ExponentVector expect = om;
        expect.add(tab->q_id, static_cast<int>(oq));
        REQUIRE(prod.terms.size() == 1);
        CHECK(prod.terms.begin()->first == expect);
        CHECK(prod.terms.begin()->second == 1);
    }
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = SkewElement::monomial(tab, random_mono());
        auto b = SkewElement::monomial(tab, random_mono());
        auto c = SkewElement::monomial(tab, random_mono());
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("small products from the worked formulas") {
    auto tab = e8();
    auto x = sym(tab, "x"), y = sym(tab, "y"), q = sym(tab, "q");
    auto e11 = sym(tab, "e11");
    // (x+y)^2 = x^2 + (1+q) x y + y^2
    auto s = x + y;
    auto expect = x * x + (c1(tab) + q) * x * y + y * y;
    CHECK(s * s == expect);
    // (1 + e11 y)(1 + q e11 y) = 1 + (1+q) e11 y + q e11^2 y^2
    auto f1 = c1(tab) + e11 * y;
    auto f2 = c1(tab) + q * e11 * y;
    CHECK(f1 * f2 == c1(tab) + (c1(tab) + q) * e11 * y + q * e11 * e11 * y * y);
}

TEST_CASE("exact one-sided division by linear factors") {
    auto tab = e8();
    auto y = sym(tab, "y");
    auto cmono = ev_of(tab->id_of("e11"));
    LinearFactor f0(tab, tab->y_id, cmono, Rat(1), 0);
    LinearFactor f1(tab, tab->y_id, cmono, Rat(1), 1);
    LinearFactor f2(tab, tab->y_id, cmono, Rat(1), 2);
    auto p = f0.as_element(tab) * f1.as_element(tab);

    SUBCASE("explicit factorization") {
        CHECK(right_divide_exact(p, f1) == f0.as_element(tab));
        CHECK(left_divide_exact(p, f0) == f1.as_element(tab));
    }
    SUBCASE("non-matching factor is rejected") {
        LinearFactor g(tab, tab->y_id, ev_of(tab->id_of("e10")), Rat(1), 0);
        CHECK(!try_right_divide(c1(tab) + sym(tab, "e11") * y, g).has_value());
        CHECK_THROWS_AS(right_divide_exact(p, f2), not_divisible);
    }
    SUBCASE("triple product peels from the left") {
        auto triple = f0.as_element(tab) * f1.as_element(tab) * f2.as_element(tab);
        CHECK(left_divide_exact(triple, f0) == f1.as_element(tab) * f2.as_element(tab));
    }
    SUBCASE("round trips on random polynomials, including x-transport shifts") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> d(0, 3), coef(-4, 4);
        for (int trial = 0; trial < 40; ++trial) {
            SkewElement p2(tab);
            for (int t = 0; t < 5; ++t) {
                ExponentVector m;
                m.add(tab->x_id, d(rng));
                m.add(tab->y_id, d(rng));
                m.add(tab->id_of("e7"), d(rng) - 1);
                p2.add_term(std::move(m), Rat(coef(rng)));
            }
            auto prod = p2 * f1.as_element(tab);
            CHECK(right_divide_exact(prod, f1) == p2);
            auto lprod = f1.as_element(tab) * p2;
            CHECK(left_divide_exact(lprod, f1) == p2);
        }
    }
}

TEST_CASE("parameter substitution maps") {
    auto tab = e8();
    // the s0 row of the parameter action
    ParamMap s0;
    s0.images[tab->id_of("e10")] = ev_of(tab->h2_id) + ev_of(tab->id_of("e11"), -1);
    s0.images[tab->id_of("e11")] = ev_of(tab->h2_id) + ev_of(tab->id_of("e10"), -1);
    s0.images[tab->h1_id] = ev_of(tab->h1_id) + ev_of(tab->h2_id) +
                            ev_of(tab->id_of("e10"), -1) + ev_of(tab->id_of("e11"), -1);
    CHECK(sym(tab, "e10").substitute_params(s0) == mono(tab, {{"h2", 1}, {"e11", -1}}));
    CHECK(sym(tab, "h1").substitute_params(s0) ==
          mono(tab, {{"h1", 1}, {"h2", 1}, {"e10", -1}, {"e11", -1}}));
    ParamMap identity;
    auto any = mono(tab, {{"h1", 2}, {"e3", -5}, {"q", 1}}, Rat(7, 3));
    CHECK(any.substitute_params(identity) == any);
}

TEST_CASE("specialize is an exact ring homomorphism") {
    auto tab = e8();
    std::map<int, Rat> asg;
    qt::RatSampler sampler(4242);
    for (int id = 0; id < tab->size(); ++id) asg[id] = sampler.next();
    auto a = mono(tab, {{"h1", 1}, {"e1", -1}}, Rat(3, 2)) + sym(tab, "x") * sym(tab, "y");
    auto b = sym(tab, "t4") + mono(tab, {{"q", -2}, {"e4", 1}});
    CHECK((a * b).specialize(asg) == a.specialize(asg) * b.specialize(asg));
    CHECK((a + b).specialize(asg) == a.specialize(asg) + b.specialize(asg));
    // (h1/e1) with {h1->3, e1->2} -> 3/2
    std::map<int, Rat> small{{tab->h1_id, Rat(3)}, {tab->id_of("e1"), Rat(2)}};
    CHECK(mono(tab, {{"h1", 1}, {"e1", -1}}).specialize(small) == Rat(3, 2));
    CHECK(c1(tab).specialize(small) == 1);
    CHECK_THROWS(sym(tab, "e2").specialize(small));
    std::map<int, Rat> zero{{tab->id_of("e1"), Rat(0)}};
    CHECK_THROWS(mono(tab, {{"e1", -1}}).specialize(zero));
}

TEST_CASE("classical limit collapses q and is multiplicative") {
    auto tab = e8();
    auto x = sym(tab, "x"), y = sym(tab, "y");
    auto p = (x + y) * (x + y);
    auto lim = p.classical_limit();
    CHECK(lim == x * x + Rat(2) * x * y + y * y);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 2), coef(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        SkewElement a(tab), b(tab);
        for (int t = 0; t < 4; ++t) {
            ExponentVector m, m2;
            m.add(tab->x_id, d(rng));
            m.add(tab->y_id, d(rng));
            m.add(tab->q_id, d(rng) - 1);
            m2.add(tab->x_id, d(rng));
            m2.add(tab->id_of("e2"), d(rng));
            a.add_term(std::move(m), Rat(coef(rng)));
            b.add_term(std::move(m2), Rat(coef(rng)));
        }
        CHECK((a * b).classical_limit() ==
              (a.classical_limit() * b.classical_limit()).classical_limit());
    }
    auto qfree = x * y + sym(tab, "e3");
    CHECK(qfree.classical_limit() == qfree);
}

TEST_CASE("element products associate and distribute at spec sizes") {
    auto tab = e8();
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(0, 4), coef(-5, 5), pickvar(0, 3);
    auto random_el = [&]() {
        SkewElement e(tab);
        for (int t = 0; t < 5; ++t) {
            ExponentVector m;
            m.add(tab->x_id, d(rng));
            m.add(tab->y_id, d(rng));
            m.add(tab->id_of("e2"), d(rng));
            m.add(tab->t(4), pickvar(rng) - 1);
            e.add_term(std::move(m), Rat(coef(rng)));
        }
        return e;
    };
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_el(), b = random_el(), c = random_el();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("coefficient slices") {
    auto tab = e8();
    auto x = sym(tab, "x"), y = sym(tab, "y");
    // the y^1 slice of the first worked polynomial is the printed product
    auto K = mono(tab, {{"e1", 1}, {"e7", 1}, {"e9", 1}, {"e10", 1}, {"e11", 1}, {"h1", -2},
                        {"h2", -1}});
    auto F = (c1(tab) + K * x) * (c1(tab) + mono(tab, {{"q", -1}, {"e1", -1}}) * x) +
             sym(tab, "e11") * (c1(tab) + mono(tab, {{"e7", 1}, {"h1", -1}}) * x) *
                 (c1(tab) + mono(tab, {{"e9", 1}, {"h1", -1}}) * x) * y;
    auto slice1 = F.slice(tab->y_id, 1);
    auto expect = sym(tab, "e11") * (c1(tab) + mono(tab, {{"e7", 1}, {"h1", -1}}) * x) *
                  (c1(tab) + mono(tab, {{"e9", 1}, {"h1", -1}}) * x);
    CHECK(slice1 == expect);
    CHECK(F.slice(tab->y_id, 2).is_zero());
    CHECK(F.slice(tab->x_id, 7).is_zero());
}

TEST_CASE("scalar evaluation of the printed formula agrees with the engine") {
    // evaluate the first worked polynomial term by term as plain rational arithmetic (each
    // printed term is already normal ordered) and compare with specialize()
    auto tab = e8();
    qt::RatSampler sampler(2718);
    std::map<int, Rat> asg;
    for (int id = 0; id < tab->size(); ++id) asg[id] = sampler.next();
    auto v = [&](const char* n) { return asg.at(tab->id_of(n)); };
    Rat x = asg.at(tab->x_id), y = asg.at(tab->y_id), q = asg.at(tab->q_id);
    Rat K = v("e1") * v("e7") * v("e9") * v("e10") * v("e11") / (v("h1") * v("h1") * v("h2"));
    Rat direct = (1 + K * x) * (1 + x / (q * v("e1"))) +
                 v("e11") * (1 + v("e7") / v("h1") * x) * (1 + v("e9") / v("h1") * x) * y;

    auto Kel = mono(tab, {{"e1", 1}, {"e7", 1}, {"e9", 1}, {"e10", 1}, {"e11", 1}, {"h1", -2},
                          {"h2", -1}});
    auto F = (c1(tab) + Kel * sym(tab, "x")) *
                 (c1(tab) + mono(tab, {{"q", -1}, {"e1", -1}}) * sym(tab, "x")) +
             sym(tab, "e11") * (c1(tab) + mono(tab, {{"e7", 1}, {"h1", -1}}) * sym(tab, "x")) *
                 (c1(tab) + mono(tab, {{"e9", 1}, {"h1", -1}}) * sym(tab, "x")) * sym(tab, "y");
    CHECK(F.specialize(asg) == direct);
}

TEST_CASE("q-specialized tables fold twists into coefficients") {
    auto tab = SymbolTable::make(GroupType::E8, {}, Rat(2, 3));
    auto x = sym(tab, "x"), y = sym(tab, "y");
    CHECK(y * x == Rat(2, 3) * x * y);
    auto f = c1(tab) + y;
    LinearFactor lf(tab, tab->y_id, {}, Rat(1), 0);
    CHECK(right_divide_exact(f * f, lf) == f);
}

#pragma once

#include "qweyl/weyl.hpp"

namespace qweyl {

// Frozen reference values for the E8 worked examples: the two long-word
// polynomials, their commutative shadows, the two-parameter family, and
// the printed transported tau value used by the bilinear checks.

namespace refdata {

inline SkewElement pm(const TablePtr& tab,
                      std::initializer_list<std::pair<const char*, int>> entries,
                      Rat c = Rat(1)) {
    ExponentVector v;
    for (const auto& [n, e] : entries) v.add(tab->id_of(n), e);
    return SkewElement::monomial(tab, std::move(v), std::move(c));
}

inline const std::vector<int>& example1_word() {
    static const std::vector<int> w{3, 2, 1, 0, 2, 4, 3};
    return w;
}

inline const std::vector<int>& example2_word() {
    static const std::vector<int> w{0, 3, 4, 0, 2, 3, 2, 1, 0, 2, 4, 3};
    return w;
}

inline LatticeVector example1_lambda() { return {2, 1, {1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1}}; }
inline LatticeVector example2_lambda() { return {2, 2, {1, 1, 0, 0, 0, 0, 1, 1, 0, 2, 1}}; }

// (1 + K x)(1 + x/(q e1)) + e11 (1 + e7/h1 x)(1 + e9/h1 x) y,
// K = e1 e7 e9 e10 e11/(h1^2 h2); at q = 1 the printed classical polynomial
inline SkewElement example1_F(const TablePtr& tab, bool classical = false) {
    auto one = SkewElement::one(tab);
    auto x = SkewElement::sym(tab, tab->x_id);
    auto y = SkewElement::sym(tab, tab->y_id);
    auto K = pm(tab, {{"e1", 1}, {"e7", 1}, {"e9", 1}, {"e10", 1}, {"e11", 1}, {"h1", -2},
                      {"h2", -1}});
    auto inv_e1 = classical ? pm(tab, {{"e1", -1}}) : pm(tab, {{"q", -1}, {"e1", -1}});
    return (one + K * x) * (one + inv_e1 * x) +
           pm(tab, {{"e11", 1}}) * (one + pm(tab, {{"e7", 1}, {"h1", -1}}) * x) *
               (one + pm(tab, {{"e9", 1}, {"h1", -1}}) * x) * y;
}

inline SkewElement example2_F(const TablePtr& tab, bool classical = false) {
    auto one = SkewElement::one(tab);
    auto x = SkewElement::sym(tab, tab->x_id);
    auto y = SkewElement::sym(tab, tab->y_id);
    auto beta = pm(tab, {{"h2", 1}, {"e10", -1}});
    auto q1 = classical ? one : pm(tab, {{"q", 1}});
    auto term1 = (classical ? pm(tab, {{"e1", -1}, {"e2", -1}})
                            : pm(tab, {{"e1", -1}, {"e2", -1}, {"q", -2}})) *
                 x * x * (one + beta * y) * (one + q1 * beta * y);
    auto brace = (pm(tab, {{"e7", -1}}) + pm(tab, {{"e8", -1}})) *
                     pm(tab, {{"h1", 1}, {"h2", 1}, {"e1", -1}, {"e2", -1}, {"e10", -1}}) * y +
                 pm(tab, {{"e1", -1}}) + pm(tab, {{"e2", -1}});
    auto term2 = (classical ? one : pm(tab, {{"q", -1}})) * x * (one + beta * y) * brace;
    auto lam_mono = classical
                        ? pm(tab, {{"h1", 2}, {"h2", 2}, {"e1", -1}, {"e2", -1}, {"e7", -1},
                                   {"e8", -1}, {"e10", -2}, {"e11", -1}})
                        : pm(tab, {{"q", -1}, {"h1", 2}, {"h2", 2}, {"e1", -1}, {"e2", -1},
                                   {"e7", -1}, {"e8", -1}, {"e10", -2}, {"e11", -1}});
    auto term3 = (one + pm(tab, {{"e11", 1}}) * y) * (one + lam_mono * y);
    return term1 + term2 + term3;
}

// the two-parameter family of class h1 h2/(e10 e11) and its printed s3 image
inline TauSection two_parameter_family(const TablePtr& tab) {
    auto one = SkewElement::one(tab);
    auto x = SkewElement::sym(tab, tab->x_id);
    auto y = SkewElement::sym(tab, tab->y_id);
    auto F = SkewElement::sym(tab, tab->id_of("c0")) * (one + pm(tab, {{"e11", 1}}) * y) +
             SkewElement::sym(tab, tab->id_of("c1")) * x *
                 (one + pm(tab, {{"h2", 1}, {"e10", -1}}) * y);
    return {F, {1, 1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}}};
}

inline SkewElement two_parameter_s3_image(const TablePtr& tab) {
    auto one = SkewElement::one(tab);
    auto x = SkewElement::sym(tab, tab->x_id);
    auto y = SkewElement::sym(tab, tab->y_id);
    auto c0 = SkewElement::sym(tab, tab->id_of("c0"));
    auto c1 = SkewElement::sym(tab, tab->id_of("c1"));
    return (c0 + c1 * x) * (one + pm(tab, {{"q", -1}, {"e1", -1}}) * x) +
           (one + pm(tab, {{"e7", 1}, {"h1", -1}}) * x) *
               (c0 * pm(tab, {{"e11", 1}}) +
                c1 * pm(tab, {{"h1", 1}, {"h2", 1}, {"e1", -1}, {"e7", -1}, {"e10", -1}}) * x) *
               y;
}

// the transported tau value whose relation the bilinear suite pins down
inline SkewElement bilinear_example_big_F(const TablePtr& tab) {
    auto one = SkewElement::one(tab);
    auto x = SkewElement::sym(tab, tab->x_id);
    auto y = SkewElement::sym(tab, tab->y_id);
    return one + pm(tab, {{"e11", 1}}) * y +
           pm(tab, {{"e7", 1}, {"e10", 1}, {"e11", 1}, {"h1", -1}, {"h2", -1}}) * x *
               (one + pm(tab, {{"h2", 1}, {"e10", -1}}) * y);
}

}  // namespace refdata

}  // namespace qweyl

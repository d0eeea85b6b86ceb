#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

// ---- tau functions on the lattice L (E8) ------------------------------------

// the 15 seed classes: e_1..e_11, h2/e1, h2/e7, h1/e10, h1/e11
inline std::vector<LatticeVector> tau_seed_classes(int n) {
    std::vector<LatticeVector> seeds;
    for (int i = 1; i <= n; ++i) seeds.push_back(LatticeVector::E(n, i));
    auto cls = [&](int h, int e) {
        LatticeVector v = LatticeVector::H(n, h);
        v.m[e - 1] += 1;
        return v;
    };
    seeds.push_back(cls(2, 1));
    seeds.push_back(cls(2, 7));
    seeds.push_back(cls(1, 10));
    seeds.push_back(cls(1, 11));
    return seeds;
}

// seed values: tau(e_i) = tau_i, tau(h2/e1) = y s2/t1, tau(h2/e7) = s2/t7,
// tau(h1/e10) = s1/t10, tau(h1/e11) = x s1/t11
inline TauSection tau_seed_value(const TablePtr& tab, const LatticeVector& lam) {
    int n = tab->npoints;
    for (int i = 1; i <= n; ++i)
        if (lam == LatticeVector::E(n, i)) return {SkewElement::one(tab), lam};
    auto F_of = [&](int h, int e) -> SkewElement {
        if (h == 2 && e == 1) return SkewElement::sym(tab, tab->y_id);
        if (h == 1 && e == 11) return SkewElement::sym(tab, tab->x_id);
        return SkewElement::one(tab);
    };
    for (auto [h, e] : {std::pair{2, 1}, {2, 7}, {1, 10}, {1, 11}}) {
        LatticeVector v = LatticeVector::H(n, h);
        v.m[e - 1] += 1;
        if (lam == v) return {F_of(h, e), lam};
    }
    throw engine_error("not a seed class");
}

// Lazily materialized tau values, cached by class; new classes are reached
// by breadth-first transport of the seeds.
class TauEvaluator {
  public:
    TablePtr tab;
    const GroupSpec& spec;
    int max_len;

    TauEvaluator(TablePtr tab_, const GroupSpec& spec_, int max_len_ = 8,
                 const std::map<LatticeVector, TauSection>* overrides = nullptr)
        : tab(std::move(tab_)), spec(spec_), max_len(max_len_) {
        for (const auto& lam : tau_seed_classes(spec.n)) {
            if (overrides && overrides->count(lam))
                cache_.emplace(lam, overrides->at(lam));
            else
                cache_.emplace(lam, tau_seed_value(tab, lam));
            frontier_.push_back(lam);
        }
    }

    const TauSection& get(const LatticeVector& lam) {
        auto it = cache_.find(lam);
        while (it == cache_.end()) {
            if (!expand_one()) throw engine_error("tau class not reachable within the word bound");
            it = cache_.find(lam);
        }
        return it->second;
    }

    // value computed along a caller-supplied word landing on lam
    TauSection evaluate_with_word(const LatticeVector& lam, const std::vector<int>& word) {
        for (const auto& seed : tau_seed_classes(spec.n)) {
            if (star_word(spec, word, seed) == lam) {
                TauSection s = apply_word(spec, word, tau_seed_value(tab, seed));
                normalize_section(s);
                return s;
            }
        }
        throw engine_error("word does not transport any seed to the requested class");
    }

  private:
    std::map<LatticeVector, TauSection> cache_;
    std::deque<LatticeVector> frontier_;
    int depth_ = 0;

    bool expand_one() {
        if (frontier_.empty() || depth_ >= max_len) return false;
        std::deque<LatticeVector> next;
        for (const auto& lam : frontier_) {
            const TauSection sec = cache_.at(lam);
            for (size_t g = 0; g < spec.gens.size(); ++g) {
                LatticeVector nlam = star_action(spec, static_cast<int>(g), lam);
                if (cache_.count(nlam)) continue;
                TauSection img = act_on_section(spec, static_cast<int>(g), sec);
                normalize_section(img);
                cache_.emplace(nlam, std::move(img));
                next.push_back(nlam);
            }
        }
        frontier_ = std::move(next);
        ++depth_;
        return true;
    }
};

// ---- bilinear relations ------------------------------------------------------

// c1 tau(mu1) tau(nu1) = sum_k c_k tau(mu_k) tau(nu_k), products in printed
// left-to-right order
struct BilinearTerm {
    SkewElement coeff;
    LatticeVector mu, nu;
};

struct BilinearRelation {
    BilinearTerm lhs;
    std::vector<BilinearTerm> rhs;
    std::string label;

    bool lattice_balanced() const {
        LatticeVector sum = lhs.mu + lhs.nu;
        for (const auto& t : rhs)
            if (!(t.mu + t.nu == sum)) return false;
        return true;
    }
};

// the seed relations of the E8 system, all index instances expanded
inline std::vector<BilinearRelation> seed_relations(const TablePtr& tab) {
    const int n = 11;
    std::vector<BilinearRelation> rels;
    auto one = SkewElement::one(tab);
    auto E = [&](int i) { return LatticeVector::E(n, i); };
    auto H2E = [&](int i) {
        LatticeVector v = LatticeVector::H(n, 2);
        v.m[i - 1] += 1;
        return v;
    };
    auto H1E = [&](int i) {
        LatticeVector v = LatticeVector::H(n, 1);
        v.m[i - 1] += 1;
        return v;
    };
    auto pm = [&](std::initializer_list<std::pair<const char*, int>> es) {
        ExponentVector v;
        for (const auto& [nm, e] : es) v.add(tab->id_of(nm), e);
        return SkewElement::monomial(tab, std::move(v));
    };
    for (int i = 1; i <= 6; ++i) {
        for (int j = 7; j <= 9; ++j) {
            std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
            rels.push_back({{one, E(10), H2E(10)},
                            {{pm({{"h2", 1}, {"e10", -1}}), H2E(i), E(i)}, {one, H2E(j), E(j)}},
                            "family1" + ij});
            rels.push_back({{one, H2E(11), E(11)},
                            {{pm({{"e11", 1}}), H2E(i), E(i)}, {one, H2E(j), E(j)}},
                            "family2" + ij});
        }
    }
    for (int i = 1; i <= 6; ++i) {
        std::string si = " i=" + std::to_string(i);
        std::string ei = "e" + std::to_string(i);
        ExponentVector inv;
        inv.add(tab->id_of(ei), -1);
        rels.push_back({{one, E(i), H1E(i)},
                        {{SkewElement::monomial(tab, inv), H1E(11), E(11)},
                         {one, H1E(10), E(10)}},
                        "family3" + si});
    }
    for (int j = 7; j <= 9; ++j) {
        std::string sj = " j=" + std::to_string(j);
        ExponentVector cj;
        cj.add(tab->id_of("e" + std::to_string(j)), 1);
        cj.add(tab->h1_id, -1);
        rels.push_back({{one, H1E(j), E(j)},
                        {{SkewElement::monomial(tab, cj), H1E(11), E(11)},
                         {one, H1E(10), E(10)}},
                        "family4" + sj});
    }
    for (int i = 1; i <= 5; ++i)
        rels.push_back({{one, H2E(i), E(i)},
                        {{one, H2E(i + 1), E(i + 1)}},
                        "chain h2/e" + std::to_string(i)});
    for (int j = 7; j <= 8; ++j)
        rels.push_back({{one, H2E(j), E(j)},
                        {{one, H2E(j + 1), E(j + 1)}},
                        "chain h2/e" + std::to_string(j)});
    return rels;
}

inline SkewElement bilinear_term_value(TauEvaluator& ev, const BilinearTerm& t) {
    return t.coeff * section_element(ev.get(t.mu)) * section_element(ev.get(t.nu));
}

inline bool verify_relation(TauEvaluator& ev, const BilinearRelation& rel) {
    if (!rel.lattice_balanced()) return false;
    SkewElement lhs = bilinear_term_value(ev, rel.lhs);
    SkewElement rhs(ev.tab);
    for (const auto& t : rel.rhs) rhs += bilinear_term_value(ev, t);
    return lhs == rhs;
}

// transport every coefficient by the parameter action and every class by the
// star action; the transported relation is again a consequence of the system
inline BilinearRelation transport_relation(const GroupSpec& spec, const std::vector<int>& word,
                                           const BilinearRelation& rel) {
    BilinearRelation out;
    out.label = rel.label + " @word";
    auto map_term = [&](const BilinearTerm& t) {
        return BilinearTerm{apply_word_params(spec, word, t.coeff), star_word(spec, word, t.mu),
                            star_word(spec, word, t.nu)};
    };
    out.lhs = map_term(rel.lhs);
    for (const auto& t : rel.rhs) out.rhs.push_back(map_term(t));
    return out;
}

// the two printed Hirota-Miwa-form relations plus arbitrary index triples of
// the first kind: (1/ea - 1/eb) tau(ec) tau(h1/ec) + cyclic = 0
inline bool verify_hirota_triple(TauEvaluator& ev, int a, int b, int c) {
    const TablePtr& tab = ev.tab;
    auto inv = [&](int i) {
        return SkewElement::monomial(tab, ev_of(tab->e(i), -1));
    };
    auto H1E = [&](int i) {
        LatticeVector v = LatticeVector::H(11, 1);
        v.m[i - 1] += 1;
        return v;
    };
    auto term = [&](int m, int k, int l) {
        // (1/e_m - 1/e_k) tau(e_l) tau(h1/e_l)
        return (inv(m) - inv(k)) * section_element(ev.get(LatticeVector::E(11, l))) *
               section_element(ev.get(H1E(l)));
    };
    auto total = term(a, b, c) + term(b, c, a) + term(c, a, b);
    return total.is_zero();
}

inline bool verify_hirota_second(TauEvaluator& ev) {
    const TablePtr& tab = ev.tab;
    auto inv = [&](int i) { return SkewElement::monomial(tab, ev_of(tab->e(i), -1)); };
    auto H1E = [&](int i) {
        LatticeVector v = LatticeVector::H(11, 1);
        v.m[i - 1] += 1;
        return v;
    };
    auto e7h1 = SkewElement::monomial(tab, ev_of(tab->e(7)) + ev_of(tab->h1_id, -1));
    auto t1 = (inv(1) - inv(2)) * section_element(ev.get(H1E(7))) *
              section_element(ev.get(LatticeVector::E(11, 7)));
    auto t2 = (inv(2) - e7h1) * section_element(ev.get(LatticeVector::E(11, 1))) *
              section_element(ev.get(H1E(1)));
    auto t3 = (e7h1 - inv(1)) * section_element(ev.get(LatticeVector::E(11, 2))) *
              section_element(ev.get(H1E(2)));
    return (t1 + t2 + t3).is_zero();
}

}  // namespace qweyl

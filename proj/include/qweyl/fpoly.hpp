#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

// ---- boundary factor templates -------------------------------------------

// x-collected form: coefficient of x^i carries
//   prod_{k in J} prod_{t=i}^{m_k-1} (1 + q^t e_k y)
//   prod_{k in I} prod_{t=d1-m_k}^{i-1} (1 + q^t h2/e_k y)
// times a free polynomial U_i(y) of the prescribed degree.
inline std::vector<LinearFactor> x_slice_factors(const GroupSpec& spec, const TablePtr& tab,
                                                 const LatticeVector& lam, int i) {
    std::vector<LinearFactor> fs;
    for (int k : spec.fx_J) {
        int mk = lam.m[k - 1];
        for (int t = i; t <= mk - 1; ++t)
            fs.emplace_back(tab, tab->y_id, ev_of(tab->e(k)), Rat(1), t);
    }
    for (int k : spec.fx_I) {
        int mk = lam.m[k - 1];
        for (int t = lam.d1 - mk; t <= i - 1; ++t)
            fs.emplace_back(tab, tab->y_id, ev_of(tab->h2_id) + ev_of(tab->e(k), -1), Rat(1), t);
    }
    return fs;
}

inline int x_slice_degree(const GroupSpec& spec, const LatticeVector& lam, int i) {
    int d = lam.d2;
    for (int k : spec.fx_I) d -= std::max(i - lam.d1 + lam.m[k - 1], 0);
    for (int k : spec.fx_J) d -= std::max(lam.m[k - 1] - i, 0);
    return d;
}

// y-collected form: coefficient of y^i carries
//   prod_{k in I} prod_{t=i-m_k}^{-1} (1 + q^t x/e_k)
//   prod_{k in J} prod_{t=0}^{i-d2+m_k-1} (1 + q^t e_k/h1 x)
inline std::vector<LinearFactor> y_slice_factors(const GroupSpec& spec, const TablePtr& tab,
                                                 const LatticeVector& lam, int i) {
    std::vector<LinearFactor> fs;
    for (int k : spec.fy_I) {
        int mk = lam.m[k - 1];
        for (int t = i - mk; t <= -1; ++t)
            fs.emplace_back(tab, tab->x_id, ev_of(tab->e(k), -1), Rat(1), t);
    }
    for (int k : spec.fy_J) {
        int mk = lam.m[k - 1];
        for (int t = 0; t <= i - lam.d2 + mk - 1; ++t)
            fs.emplace_back(tab, tab->x_id, ev_of(tab->e(k)) + ev_of(tab->h1_id, -1), Rat(1), t);
    }
    return fs;
}

inline int y_slice_degree(const GroupSpec& spec, const LatticeVector& lam, int i) {
    int d = lam.d1;
    for (int k : spec.fy_I) d -= std::max(lam.m[k - 1] - i, 0);
    for (int k : spec.fy_J) d -= std::max(i - lam.d2 + lam.m[k - 1], 0);
    return d;
}

// ---- symbolic condition check ---------------------------------------------

struct SliceReport {
    char side;  // 'x' or 'y'
    int index;
    bool pass;
    std::string reason;
};

struct ConditionReport {
    bool pass = true;
    std::vector<SliceReport> slices;

    void add(char side, int idx, bool ok, std::string why = "") {
        pass = pass && ok;
        slices.push_back({side, idx, ok, std::move(why)});
    }
};

inline ConditionReport check_conditions(const GroupSpec& spec, const LatticeVector& lam,
                                        const SkewElement& F, const ParamMap* postmap = nullptr) {
    const TablePtr& tab = F.tab;
    ConditionReport rep;
    SkewElement G = postmap ? F.substitute_params(*postmap) : F;
    if (!G.tau_free()) throw engine_error("check_conditions expects a tau-free polynomial");
    if (!G.is_zero() &&
        (G.degree_min(tab->x_id) < 0 || G.degree_min(tab->y_id) < 0 ||
         G.degree_max(tab->x_id) > lam.d1 || G.degree_max(tab->y_id) > lam.d2)) {
        rep.add('x', -1, false, "bidegree outside (d1, d2)");
        return rep;
    }
    auto run_side = [&](char side) {
        int var = side == 'x' ? tab->x_id : tab->y_id;
        int other = side == 'x' ? tab->y_id : tab->x_id;
        int top = side == 'x' ? lam.d1 : lam.d2;
        for (int i = 0; i <= top; ++i) {
            SkewElement A = G.slice(var, i);
            int deg = side == 'x' ? x_slice_degree(spec, lam, i) : y_slice_degree(spec, lam, i);
            if (deg < 0) {
                rep.add(side, i, A.is_zero(), A.is_zero() ? "" : "slice must vanish");
                continue;
            }
            auto fs = side == 'x' ? x_slice_factors(spec, tab, lam, i)
                                  : y_slice_factors(spec, tab, lam, i);
            bool ok = true;
            std::string why;
            for (const auto& f0 : fs) {
                LinearFactor f = f0;
                if (postmap) {
                    f = LinearFactor(tab, f0.var, detail::apply_param_map(*postmap, f0.mono),
                                     f0.coeff, f0.shift);
                }
                auto q = try_right_divide(A, f);
                if (!q) {
                    ok = false;
                    why = "boundary factor does not divide";
                    break;
                }
                A = *q;
            }
            if (ok && !A.is_zero() && A.degree_max(other) > deg) {
                ok = false;
                why = "free part exceeds prescribed degree";
            }
            rep.add(side, i, ok, why);
        }
    };
    run_side('x');
    run_side('y');
    return rep;
}

// ---- exact linear solving at rational specializations ----------------------

struct Specialization {
    std::map<int, Rat> values;  // param symbol -> value (q included)
};

// random rationals with small numerators/denominators, distinct, q != 1
inline Specialization random_specialization(const TablePtr& tab, std::mt19937_64& rng,
                                            const ParamMap* constraint = nullptr,
                                            const std::string& elim = "") {
    std::uniform_int_distribution<int> d(2, 97);
    Specialization s;
    std::set<std::pair<long, long>> seen;
    auto draw = [&]() {
        for (;;) {
            Rat r(d(rng), d(rng));
            r.canonicalize();
            if (r == 1) continue;
            auto key = std::make_pair(r.get_num().get_si(), r.get_den().get_si());
            if (seen.insert(key).second) return r;
        }
    };
    s.values[tab->q_id] = draw();
    s.values[tab->h1_id] = draw();
    s.values[tab->h2_id] = draw();
    for (int i = 1; i <= tab->npoints; ++i) s.values[tab->e(i)] = draw();
    for (int id = tab->const_base; id < tab->size(); ++id) s.values[id] = draw();
    if (constraint) {
        // overwrite the eliminated symbol with the value the constraint forces
        int id = tab->id_of(elim);
        const ExponentVector& img = constraint->images.at(id);
        Rat v(1);
        for (const auto& [jid, e] : img.entries) v *= rat_pow(s.values.at(jid), e);
        s.values[id] = v;
    }
    return s;
}

struct LinearSolveResult {
    long dim = 0;
    int d1 = 0, d2 = 0;
    // echelonized nullspace basis over the coefficient grid, index i*(d2+1)+j
    std::vector<std::vector<Rat>> basis;
};

namespace detail {

inline Rat eval_factor_root(const TablePtr& tab, const LinearFactor& f, const Specialization& sp) {
    // root of (1 + q^t c v) in v
    Rat c = f.coeff * rat_pow(sp.values.at(tab->q_id), f.shift);
    for (const auto& [id, e] : f.mono.entries) c *= rat_pow(sp.values.at(id), e);
    return Rat(-1) / c;
}

// reduced row echelon form; returns pivot columns
inline std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c] != 0) {
                Rat f = m[i][c];
                for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace detail

// Rows of the vanishing conditions for one specialization.  Every prescribed
// factor becomes a point evaluation at its root (generically simple; the
// caller resamples on root collisions), a negative prescribed degree empties
// the slice.
inline std::optional<std::vector<std::vector<Rat>>> condition_rows(const GroupSpec& spec,
                                                                   const TablePtr& tab,
                                                                   const LatticeVector& lam,
                                                                   const Specialization& sp) {
    int d1 = lam.d1, d2 = lam.d2;
    if (d1 < 0 || d2 < 0) throw engine_error("negative bidegree");
    size_t n = static_cast<size_t>(d1 + 1) * (d2 + 1);
    auto idx = [&](int i, int j) { return static_cast<size_t>(i) * (d2 + 1) + j; };
    std::vector<std::vector<Rat>> rows;
    auto add_zero_slice = [&](char side, int i) {
        int lim = side == 'x' ? d2 : d1;
        for (int j = 0; j <= lim; ++j) {
            std::vector<Rat> row(n, Rat(0));
            row[side == 'x' ? idx(i, j) : idx(j, i)] = 1;
            rows.push_back(std::move(row));
        }
    };
    for (char side : {'x', 'y'}) {
        int top = side == 'x' ? d1 : d2;
        for (int i = 0; i <= top; ++i) {
            int deg = side == 'x' ? x_slice_degree(spec, lam, i) : y_slice_degree(spec, lam, i);
            auto fs = side == 'x' ? x_slice_factors(spec, tab, lam, i)
                                  : y_slice_factors(spec, tab, lam, i);
            if (deg < 0) {
                add_zero_slice(side, i);
                continue;
            }
            std::set<std::pair<long, long>> roots_seen;
            for (const auto& f : fs) {
                Rat r = detail::eval_factor_root(tab, f, sp);
                auto key = std::make_pair(r.get_num().get_si(), r.get_den().get_si());
                if (!roots_seen.insert(key).second) return std::nullopt;  // degenerate draw
                int lim = side == 'x' ? d2 : d1;
                std::vector<Rat> row(n, Rat(0));
                Rat p(1);
                for (int j = 0; j <= lim; ++j) {
                    row[side == 'x' ? idx(i, j) : idx(j, i)] = p;
                    p *= r;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

inline LinearSolveResult solve_linear_system(const GroupSpec& spec, const TablePtr& tab,
                                             const LatticeVector& lam, const Specialization& sp) {
    auto rows = condition_rows(spec, tab, lam, sp);
    if (!rows) throw engine_error("degenerate specialization (factor root collision)");
    LinearSolveResult res;
    res.d1 = lam.d1;
    res.d2 = lam.d2;
    size_t n = static_cast<size_t>(lam.d1 + 1) * (lam.d2 + 1);
    auto pivots = detail::rref(*rows);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[c] = 1;
        size_t r = 0;
        for (size_t pc = 0; pc < n; ++pc) {
            if (!is_pivot[pc]) continue;
            v[pc] = -(*rows)[r][c];
            ++r;
        }
        res.basis.push_back(std::move(v));
    }
    res.dim = static_cast<long>(res.basis.size());
    return res;
}

// specialized coefficient grid of a symbolic tau-free polynomial
inline std::vector<Rat> coefficient_grid(const SkewElement& F, const LatticeVector& lam,
                                         const Specialization& sp) {
    const TablePtr& tab = F.tab;
    size_t n = static_cast<size_t>(lam.d1 + 1) * (lam.d2 + 1);
    std::vector<Rat> grid(n, Rat(0));
    for (const auto& [m, c] : F.terms) {
        int i = m.get(tab->x_id), j = m.get(tab->y_id);
        if (i < 0 || i > lam.d1 || j < 0 || j > lam.d2)
            throw engine_error("polynomial exceeds the bidegree grid");
        Rat v = c;
        for (const auto& [id, e] : m.entries) {
            if (id == tab->x_id || id == tab->y_id) continue;
            v *= rat_pow(sp.values.at(id), e);
        }
        grid[static_cast<size_t>(i) * (lam.d2 + 1) + j] += v;
    }
    return grid;
}

inline bool in_solution_space(const GroupSpec& spec, const TablePtr& tab, const LatticeVector& lam,
                              const Specialization& sp, const std::vector<Rat>& grid) {
    auto rows = condition_rows(spec, tab, lam, sp);
    if (!rows) throw engine_error("degenerate specialization");
    for (const auto& row : *rows) {
        Rat acc(0);
        for (size_t k = 0; k < row.size(); ++k) acc += row[k] * grid[k];
        if (acc != 0) return false;
    }
    return true;
}

inline void normalize_grid(std::vector<Rat>& g) {
    for (auto& v : g) {
        if (v != 0) {
            Rat inv = Rat(1) / v;
            for (auto& w : g) w *= inv;
            return;
        }
    }
}

// ---- non-logarithmic singularity checks ------------------------------------

enum class Boundary { X0, XInf, Y0, YInf };

inline std::string boundary_name(Boundary b) {
    switch (b) {
        case Boundary::X0: return "x=0";
        case Boundary::XInf: return "x=inf";
        case Boundary::Y0: return "y=0";
        case Boundary::YInf: return "y=inf";
    }
    return "?";
}

// One root run of length m based at factor (1 + q^t_offset c v): at x=0 the
// slice A_i must keep the factors t in [i, m-1] (offsets relative to
// t_offset), and mirrored for the other three boundaries.
struct NonLogQuery {
    Boundary boundary;
    ExponentVector base;  // c, PARAM monomial
    Rat base_coeff = Rat(1);
    int m = 1;
    int t_offset = 0;
};

inline ConditionReport check_nonlog(const SkewElement& D, const NonLogQuery& q) {
    const TablePtr& tab = D.tab;
    if (!D.tau_free()) throw engine_error("check_nonlog expects a tau-free operator");
    ConditionReport rep;
    bool xside = q.boundary == Boundary::X0 || q.boundary == Boundary::XInf;
    int var = xside ? tab->x_id : tab->y_id;
    int fvar = xside ? tab->y_id : tab->x_id;
    int top = D.is_zero() ? 0 : D.degree_max(var);
    for (int k = 0; k <= q.m - 1; ++k) {
        int slice_index;
        int t_lo, t_hi;
        switch (q.boundary) {
            case Boundary::X0:
                slice_index = k;
                t_lo = q.t_offset + k;
                t_hi = q.t_offset + q.m - 1;
                break;
            case Boundary::XInf:
                slice_index = top - k;
                t_lo = q.t_offset;
                t_hi = q.t_offset + q.m - k - 1;
                break;
            case Boundary::Y0:
                slice_index = k;
                t_lo = q.t_offset + k - q.m;
                t_hi = q.t_offset - 1;
                break;
            case Boundary::YInf:
                slice_index = top - k;
                t_lo = q.t_offset;
                t_hi = q.t_offset + q.m - k - 1;
                break;
        }
        SkewElement A = D.slice(var, slice_index);
        bool ok = true;
        std::string why;
        for (int t = t_lo; t <= t_hi && ok; ++t) {
            LinearFactor f(tab, fvar, q.base, q.base_coeff, t);
            auto quo = try_right_divide(A, f);
            if (!quo) {
                ok = false;
                std::ostringstream os;
                os << "missing factor at shift " << t;
                why = os.str();
            } else {
                A = *quo;
            }
        }
        rep.add(xside ? 'x' : 'y', slice_index, ok, why);
    }
    return rep;
}

// run data read off a class lambda, one query per boundary factor family
inline std::vector<NonLogQuery> nonlog_queries(const GroupSpec& spec, const TablePtr& tab,
                                               const LatticeVector& lam) {
    std::vector<NonLogQuery> qs;
    for (int k : spec.fx_J) {
        int mk = lam.m[k - 1];
        if (mk >= 1) qs.push_back({Boundary::X0, ev_of(tab->e(k)), Rat(1), mk, 0});
    }
    for (int k : spec.fx_I) {
        int mk = lam.m[k - 1];
        if (mk >= 1)
            qs.push_back({Boundary::XInf, ev_of(tab->h2_id) + ev_of(tab->e(k), -1), Rat(1), mk,
                          lam.d1 - mk});
    }
    for (int k : spec.fy_I) {
        int mk = lam.m[k - 1];
        if (mk >= 1) qs.push_back({Boundary::Y0, ev_of(tab->e(k), -1), Rat(1), mk, 0});
    }
    for (int k : spec.fy_J) {
        int mk = lam.m[k - 1];
        if (mk >= 1)
            qs.push_back({Boundary::YInf, ev_of(tab->e(k)) + ev_of(tab->h1_id, -1), Rat(1), mk, 0});
    }
    return qs;
}

// Rejects draws where two distinct factor families collide up to a q-power
// within the probe window: such draws fake resonances the operator does not
// have (e.g. q^2 = e7/e8 aliases two point multiplicities).
inline bool nonlog_guard(const TablePtr& tab, const std::vector<NonLogQuery>& queries,
                         const Specialization& sp, int window) {
    Rat qv = sp.values.at(tab->q_id);
    auto side_of = [](Boundary b) {
        return (b == Boundary::X0 || b == Boundary::XInf) ? 0 : 1;
    };
    for (size_t a = 0; a < queries.size(); ++a) {
        for (size_t b = a + 1; b < queries.size(); ++b) {
            if (side_of(queries[a].boundary) != side_of(queries[b].boundary)) continue;
            Rat ca = queries[a].base_coeff, cb = queries[b].base_coeff;
            for (const auto& [id, e] : queries[a].base.entries) ca *= rat_pow(sp.values.at(id), e);
            for (const auto& [id, e] : queries[b].base.entries) cb *= rat_pow(sp.values.at(id), e);
            Rat ratio = ca / cb;
            Rat p(1);
            for (int k = 0; k <= window; ++k) {
                if (ratio == p || ratio * p == 1) return false;
                p *= qv;
            }
        }
    }
    return true;
}

// Starting exponent for the series oracle: the run root whose successors in
// the recursion direction sweep the remaining run members.  At y=inf the
// indicial slice is the reordered Bhat_{d2}(x) = B_{d2}(q^{-d2} x), so its
// roots carry an extra q^{d2} against the template factors; d2 is the
// operator's top y-degree.
inline Rat oracle_root_for_query(const TablePtr& tab, const NonLogQuery& q,
                                 const Specialization& sp, int d2 = 0) {
    Rat c = q.base_coeff;
    for (const auto& [id, e] : q.base.entries) c *= rat_pow(sp.values.at(id), e);
    Rat qv = sp.values.at(tab->q_id);
    int t = 0;
    int lead_shift = 0;
    switch (q.boundary) {
        case Boundary::X0: t = q.t_offset + q.m - 1; break;   // recursion climbs q^+
        case Boundary::XInf: t = q.t_offset; break;           // recursion descends q^-
        case Boundary::Y0: t = q.t_offset - q.m; break;       // descends
        case Boundary::YInf:                                   // climbs
            t = q.t_offset + q.m - 1;
            lead_shift = d2;
            break;
    }
    return rat_pow(qv, lead_shift) * Rat(-1) / (c * rat_pow(qv, t));
}

// ---- power series solution oracle ------------------------------------------

enum class SeriesCase { Case1, Case2a, Case2b, Inconclusive };

struct SeriesOracleReport {
    SeriesCase result = SeriesCase::Case1;
    std::vector<int> resonances;  // indices k where the leading slice vanished
    int failed_at = -1;           // k of the obstructed resonance for case2a
};

// Runs the recursion sum_i A_i(r q^{+-j}) c_j = 0 at an exact rational
// specialization around one exponent r and classifies the singularity.
inline SeriesOracleReport series_solution_oracle(const SkewElement& D, Boundary boundary,
                                                 const Specialization& sp, const Rat& root,
                                                 int depth) {
    const TablePtr& tab = D.tab;
    if (!D.tau_free()) throw engine_error("series oracle expects a tau-free operator");
    bool xside = boundary == Boundary::X0 || boundary == Boundary::XInf;
    int var = xside ? tab->x_id : tab->y_id;
    int fvar = xside ? tab->y_id : tab->x_id;
    int top = D.degree_max(var);
    Rat qv = sp.values.at(tab->q_id);

    // slice i as a univariate evaluation; for the y-boundaries the operator
    // is reordered as sum y^b Bhat_b(x), which shifts x by q^{-b} per term
    auto eval_slice = [&](int i, const Rat& at) {
        Rat acc(0);
        for (const auto& [m, c] : D.terms) {
            if (m.get(var) != i) continue;
            Rat v = c;
            long reorder = xside ? 0 : -static_cast<long>(m.get(tab->x_id)) * m.get(tab->y_id);
            for (const auto& [id, e] : m.entries) {
                if (id == var) continue;
                if (id == fvar) {
                    v *= rat_pow(at, e);
                } else {
                    v *= rat_pow(sp.values.at(id), e);
                }
            }
            v *= rat_pow(qv, reorder);
            acc += v;
        }
        return acc;
    };
    // slice order and shift direction per boundary
    auto slice_of = [&](int i) {
        switch (boundary) {
            case Boundary::X0:
            case Boundary::Y0: return i;
            case Boundary::XInf:
            case Boundary::YInf: return top - i;
        }
        return i;
    };
    int dir = (boundary == Boundary::X0 || boundary == Boundary::YInf) ? 1 : -1;

    SeriesOracleReport rep;
    std::vector<Rat> c(depth + 1, Rat(0));
    c[0] = 1;
    for (int k = 1; k <= depth; ++k) {
        Rat xk(0);
        for (int i = 1; i <= std::min(k, top); ++i)
            xk += eval_slice(slice_of(i), root * rat_pow(qv, dir * (k - i))) * c[k - i];
        Rat lead = eval_slice(slice_of(0), root * rat_pow(qv, dir * k));
        if (lead != 0) {
            c[k] = -xk / lead;
        } else {
            rep.resonances.push_back(k);
            if (xk != 0) {
                rep.result = SeriesCase::Case2a;
                rep.failed_at = k;
                return rep;
            }
            c[k] = 0;
        }
    }
    rep.result = rep.resonances.empty() ? SeriesCase::Case1 : SeriesCase::Case2b;
    return rep;
}

}  // namespace qweyl

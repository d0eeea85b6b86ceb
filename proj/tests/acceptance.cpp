// Acceptance battery: one line per criterion, exact equality throughout (the
// verified statements are algebraic identities over the rationals, so there
// are no tolerances anywhere).  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

long run_ms(const std::function<bool()>& body, bool& ok) {
    auto t0 = Clock::now();
    ok = body();
    auto t1 = Clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
}

void criterion(int number, const std::string& text, long budget_ms,
               const std::function<bool()>& body) {
    bool ok = false;
    long ms = run_ms(body, ok);
    bool within = ms <= budget_ms;
    if (!ok || !within) ++failures;
    std::printf("[%s] criterion %2d: %s (%ld ms / %ld ms)%s\n",
                ok && within ? "PASS" : "FAIL", number, text.c_str(), ms, budget_ms,
                !ok ? "" : (within ? "" : " -- over budget"));
    std::fflush(stdout);
}

bool suite_ok(const std::string& name, uint64_t seed) { return run_suite(name, seed).pass; }

}  // namespace

int main() {
    const uint64_t seed = 20210815;  // fixed: identical runs must be identical

    criterion(1, "worked examples reproduce exactly, with their q=1 limits", 2000, [] {
        auto tab = SymbolTable::make(GroupType::E8, {"c0", "c1"});
        const auto& spec = GroupSpec::get(GroupType::E8);
        bool ok = true;
        {
            bool sub_ok = false;
            long ms = run_ms(
                [&] {
                    auto s1 = construct_via_weyl(spec, refdata::example1_word(), 1, tab);
                    return s1.lam == refdata::example1_lambda() && s1.F == refdata::example1_F(tab) &&
                           s1.F.classical_limit() ==
                               refdata::example1_F(tab, true).classical_limit();
                },
                sub_ok);
            ok = ok && sub_ok && ms < 1000;
        }
        {
            bool sub_ok = false;
            long ms = run_ms(
                [&] {
                    auto s2 = construct_via_weyl(spec, refdata::example2_word(), 11, tab);
                    return s2.lam == refdata::example2_lambda() && s2.F == refdata::example2_F(tab) &&
                           s2.F.classical_limit() ==
                               refdata::example2_F(tab, true).classical_limit();
                },
                sub_ok);
            ok = ok && sub_ok && ms < 1000;
        }
        return ok;
    });

    criterion(2, "Coxeter and braid relations for E8/E7/E6/D5 on section probes", 60000,
              [&] { return suite_ok("relations", seed); });

    criterion(3, "k1, k2 fixed by all nine E8 generators", 10000,
              [&] { return suite_ok("k-invariants", seed); });

    criterion(4, "adjoint realization matches s0, s3 on x, y, tau10, tau11, tau1, tau7", 60000,
              [&] {
                  RationalSampler s(seed + 4);
                  for (int trial = 0; trial < 3; ++trial) {
                      Rat q = s.next();
                      for (int gen : {0, 3})
                          for (const char* name : {"x", "y", "t10", "t11", "t1", "t7"})
                              if (!verify_adjoint_once(GroupType::E8, gen, name, q, 6))
                                  return false;
                  }
                  return true;
              });

    criterion(5, "quantum dilogarithm identity and the braid product G = G~ at order 8", 60000,
              [&] {
                  if (!verify_dilog_identity(Rat(3, 2), Rat(5, 7), Rat(2, 3), 8)) return false;
                  RationalSampler s(seed + 5);
                  for (int t = 0; t < 2; ++t) {
                      Rat a = s.next(), b = s.next(), q = s.next();
                      if (!verify_dilog_identity(a, b, q, 8)) return false;
                  }
                  for (int t = 0; t < 3; ++t)
                      if (!verify_braid_G(s.next(), 8)) return false;
                  return true;
              });

    criterion(6, "dual characterization of F on 10+ orbit classes at 3 specializations", 300000,
              [&] { return suite_ok("fpoly", seed); });

    criterion(7, "non-logarithmic runs and series oracle agree, mutations flip", 120000,
              [&] { return suite_ok("nonlog", seed); });

    criterion(8, "quantum curves: fixed class, dim 2 pencil, conditions, invariance", 300000,
              [&] { return suite_ok("curves", seed); });

    criterion(9, "bilinear system: seeds, printed transport, 50 transports, Hirota forms",
              300000, [&] { return suite_ok("bilinear", seed); });

    criterion(10, "verify-paper reports are byte-identical across reruns", 300000, [&] {
        auto build = [&] {
            Json suites_json = Json::array();
            bool all = true;
            for (const auto& n : suite_names()) {
                auto r = run_suite(n, seed);
                all = all && r.pass;
                suites_json.push_back({{"name", r.name}, {"pass", r.pass},
                                       {"details", r.details}});
            }
            Json report{{"schema", 1}, {"command", "verify-paper"}, {"seed", seed},
                        {"suites", suites_json}, {"pass", all}};
            return report.dump(2);
        };
        std::string a = build();
        std::string b = build();
        return a == b && !a.empty() && a.find("\"pass\": true") != std::string::npos;
    });

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are exact integer matches unless noted.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "snfc/capacity_bounds.hpp"
#include "snfc/code.hpp"
#include "snfc/cuts.hpp"
#include "snfc/fixtures.hpp"
#include "snfc/verification.hpp"
#include "support/random_dag.hpp"

using namespace snfc;

namespace {

constexpr std::size_t kCorpusSize = 200;
constexpr double kButterflySeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr std::uint64_t kAcceptanceExhaustiveCap = std::uint64_t(1) << 16;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Network> corpus() {
    std::vector<Network> out;
    for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) out.push_back(testgen::random_network(seed));
    return out;
}

std::string ids(const Network& n, const EdgeSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + n.edge(s[k]).id;
    return out + "}";
}

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

// Runs a criterion body; an exception counts as failure with its message.
void criterion(int id, const std::string& title, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    report(id, title, pass, detail.str());
}

bool all_true(const VerifyReport& v) {
    return v.computable && v.secure_rank && v.bound_consistent && v.computable_exhaustive.value_or(false) &&
           v.secure_exhaustive.value_or(false);
}

}  // namespace

int main() {
    criterion(1, "butterfly exactness", [](std::ostringstream& d) {
        const auto t0 = Clock::now();
        const auto n = fixtures::butterfly();
        const auto cm = c_min(n), cmb = c_min_bar(n), lo = lower_bound(n, 1);
        const auto ub = upper_bound(n, 1);
        const auto ex = exact_capacity(n, 1);
        const double dt = seconds_since(t0);
        d << "c_min=" << cm << " c_min_bar=" << cmb << " upper=" << ub.upper << " lower=" << lo << " exact=";
        if (ex) d << ex->value << " (" << reason_name(ex->reason) << ")";
        else d << "none";
        d << " time=" << dt << "s";
        return cm == 2 && cmb == 2 && ub.upper == 1 && lo == 1 && ex && ex->value == 1 &&
               ex->reason == ExactReason::cmin_equals_cminbar && dt < kButterflySeconds;
    });

    criterion(2, "primary cut fixture", [](std::ostringstream& d) {
        const auto n = fixtures::fig2();
        const std::vector<std::size_t> u{n.node_index("u1"), n.node_index("u2")};
        const auto rep = min_cut_edge_target(n, u, n.edge_set({"e7", "e8"}));
        d << "cut=" << ids(n, rep.cut_edges) << " capacity=" << rep.capacity;
        return rep.cut_edges == n.edge_set({"e5"}) && rep.capacity == 1;
    });

    criterion(3, "no-penalty network", [](std::ostringstream& d) {
        const auto n = fixtures::n1();
        const auto code = fixtures::secure_code_from(n, fixtures::n1_code_spec());
        VerifyOptions opt;
        const auto v = verify(code, n, 1, opt);
        const auto cm = c_min(n), ub = upper_bound(n, 1).upper, lo = lower_bound(n, 1);
        d << "c_min=" << cm << " upper=" << ub << " lower=" << lo << " rate=" << v.ell << "/" << v.n
          << " computable=" << v.computable << " secure_rank=" << v.secure_rank
          << " secure_exhaustive=" << v.secure_exhaustive.value_or(false);
        return cm == 1 && ub == 1 && lo == 0 && all_true(v) && v.ell == 1 && v.n == 1;
    });

    criterion(4, "GF(4) butterfly regression", [](std::ostringstream& d) {
        const auto n = fixtures::butterfly();
        const auto code = fixtures::butterfly_secure_code();
        std::size_t matched = 0;
        for (const auto& [id, h] : fixtures::butterfly_h_vectors())
            if (code.H.col_values(n.edge_index(id)) == h) ++matched;
        const auto v = verify(code, n, 1);
        const auto lifted = lift_extension(code);
        d << "h-vectors matched " << matched << "/9, verify all-true=" << all_true(v) << " rate=" << v.ell << "/"
          << v.n << ", lifted (" << lifted.ell << "," << lifted.n << ") over GF(" << lifted.base.to_string() << ")";
        return matched == 9 && all_true(v) && v.ell == v.n && lifted.ell == 2 && lifted.n == 2 &&
               lifted.base.q() == 2;
    });

    criterion(5, "GF(2) hand code outside the construction", [](std::ostringstream& d) {
        const auto n = fixtures::butterfly();
        const auto code = fixtures::secure_code_from(n, fixtures::butterfly_gf2_spec());
        const auto v = verify(code, n, 1);
        const auto sum = fixtures::sum_code(n, fixtures::butterfly_sum_spec(Field::make(2, 1)));
        std::string outcome = "returned a matrix";
        try {
            choose_B(sum, 1, primary_wiretap_sets(n, 1, true));
        } catch (const Error& e) {
            outcome = std::string(code_name(e.code()));
        }
        d << "verify all-true=" << all_true(v) << " rate=" << v.ell << "/" << v.n << ", choose_B over GF(2): " << outcome;
        return all_true(v) && v.ell == 1 && outcome == "FieldTooSmall";
    });

    criterion(6, "W*_1 census and field threshold", [](std::ostringstream& d) {
        const auto n = fixtures::butterfly();
        const auto fam = primary_wiretap_sets(n, 1, true);
        std::vector<EdgeSet> want;
        for (const char* id : {"e1", "e2", "e3", "e4", "e5", "e8", "e9"}) want.push_back(n.edge_set({id}));
        const auto res = construct_report(n, 1);
        const auto q = res.code.field().q();
        const auto v = verify(res.code, n, 1);
        d << "|W*_1|=" << fam.size() << " s*|W*_1|=" << n.num_sources() * fam.size() << ", construct over GF("
          << res.code.field().to_string() << ") after " << res.fields_tried << " field(s), verify all-true=" << all_true(v);
        return fam == want && n.num_sources() * fam.size() == 14 && q <= 16 && all_true(v);
    });

    const auto nets = corpus();

    criterion(7, "oracle equivalence", [&](std::ostringstream& d) {
        const auto t0 = Clock::now();
        std::size_t checked = 0, mismatches = 0;
        std::string first;
        for (std::size_t k = 0; k < nets.size(); ++k)
            for (std::size_t r = 0; r <= 2; ++r) {
                const auto fast = upper_bound(nets[k], r).upper;
                const auto slow = upper_bound_oracle(nets[k], r);
                ++checked;
                if (fast != slow && mismatches++ == 0)
                    first = " first mismatch seed " + std::to_string(k + 1) + " r=" + std::to_string(r);
            }
        const double dt = seconds_since(t0);
        d << checked << " (network, r) pairs, " << mismatches << " mismatches, time=" << dt << "s" << first;
        return mismatches == 0 && nets.size() >= 200 && dt < kOracleSeconds;
    });

    criterion(8, "construction soundness", [&](std::ostringstream& d) {
        std::size_t built = 0, infeasible = 0, exhaustive_runs = 0, bad = 0, disagreements = 0;
        std::string first;
        VerifyOptions opt;
        opt.cap = kAcceptanceExhaustiveCap;
        for (std::size_t k = 0; k < nets.size(); ++k) {
            const auto& n = nets[k];
            const std::size_t cm = c_min(n);
            for (std::size_t r = 0; r <= cm; ++r) {
                const std::string tag = "seed " + std::to_string(k + 1) + " r=" + std::to_string(r);
                try {
                    const auto sc = construct(n, r);
                    ++built;
                    const auto v = verify(sc, n, r, opt);
                    if (v.secure_exhaustive) {
                        ++exhaustive_runs;
                        if (*v.secure_exhaustive != v.secure_rank && disagreements++ == 0 && first.empty())
                            first = " rank/exhaustive disagree at " + tag;
                    }
                    if (!v.all_ok() && bad++ == 0 && first.empty()) first = " verify failed at " + tag + ": " + v.failure;
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::RateInfeasible && r == cm) {
                        ++infeasible;
                    } else if (bad++ == 0 && first.empty()) {
                        first = " " + tag + ": " + e.what();
                    }
                }
            }
        }
        d << built << " codes verified, " << infeasible << " RateInfeasible (R=r), " << exhaustive_runs
          << " exhaustive checks, " << bad << " failures, " << disagreements << " rank/exhaustive disagreements" << first;
        return bad == 0 && disagreements == 0 && built > 0;
    });

    criterion(9, "r = 0 degeneracy", [&](std::ostringstream& d) {
        std::size_t violations = 0, zero_cases = 0;
        for (const auto& n : nets) {
            if (upper_bound(n, 0).upper != c_min(n)) ++violations;
            for (std::size_t r = 0; r <= n.num_edges(); ++r)
                if (zero_capacity(n, r)) {
                    ++zero_cases;
                    if (upper_bound(n, r).upper != 0) ++violations;
                }
        }
        d << nets.size() << " networks, " << zero_cases << " zero-capacity (network, r) pairs, " << violations
          << " violations";
        return violations == 0;
    });

    criterion(10, "bracket invariant", [&](std::ostringstream& d) {
        std::size_t checked = 0, violations = 0;
        for (const auto& n : nets) {
            const std::size_t cm = c_min(n);
            for (std::size_t r = 0; r <= n.num_edges(); ++r) {
                const std::size_t ub = upper_bound(n, r).upper;
                const std::size_t floor = cm > r ? cm - r : 0;
                ++checked;
                if (ub < floor || ub > cm) ++violations;
            }
        }
        d << checked << " (network, r) pairs, " << violations << " violations";
        return violations == 0;
    });

    std::printf("%s: %d criterion failure(s)\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}

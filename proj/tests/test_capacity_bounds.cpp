#include <gtest/gtest.h>

#include "snfc/capacity_bounds.hpp"
#include "snfc/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_dag.hpp"

using namespace snfc;

namespace {

std::vector<std::vector<std::string>> ids(const Network& n, const std::vector<EdgeSet>& sets) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : sets) out.push_back(n.edge_ids(s));
    return out;
}

std::vector<Network> corpus(std::size_t count) {
    std::vector<Network> out;
    for (std::uint64_t seed = 0; seed < count; ++seed) out.push_back(testgen::random_network(seed));
    return out;
}

}  // namespace

TEST(Omega, Examples) {
    const auto b = fixtures::butterfly();
    EXPECT_EQ(omega(b, {}), 2u);
    const auto r1 = omega_report(b, b.edge_set({"e1"}));
    EXPECT_EQ(r1.value, 1u);
    EXPECT_EQ(b.edge_ids(r1.cut), std::vector<std::string>{"e2"});
    const auto n1 = fixtures::n1();
    const auto r5 = omega_report(n1, n1.edge_set({"e5"}));
    EXPECT_EQ(r5.value, 1u);
    EXPECT_EQ(n1.edge_ids(r5.cut), std::vector<std::string>{"e4"});
}

TEST(PrimaryWiretapSets, Examples) {
    const auto b = fixtures::butterfly();
    EXPECT_EQ(primary_wiretap_sets(b, 0, false), std::vector<EdgeSet>{EdgeSet{}});
    EXPECT_EQ(primary_wiretap_sets(b, 0, true), std::vector<EdgeSet>{EdgeSet{}});
    EXPECT_EQ(ids(b, primary_wiretap_sets(b, 1, true)),
              (std::vector<std::vector<std::string>>{{"e1"}, {"e2"}, {"e3"}, {"e4"}, {"e5"}, {"e8"}, {"e9"}}));
    const auto w1 = primary_wiretap_sets(b, 1, false);
    EXPECT_EQ(w1.size(), 8u);
    EXPECT_TRUE(w1.front().empty());
    const auto f2 = fixtures::fig2();
    const auto w2 = primary_wiretap_sets(f2, 2, false);
    EXPECT_EQ(std::find(w2.begin(), w2.end(), f2.edge_set({"e7", "e8"})), w2.end());
    EXPECT_TRUE(std::is_sorted(w2.begin(), w2.end()));
}

TEST(UpperBound, Examples) {
    const auto b = fixtures::butterfly();
    const auto rep = upper_bound(b, 1);
    EXPECT_EQ(rep.upper, 1u);
    EXPECT_EQ(rep.lower, 1u);
    EXPECT_EQ(rep.c_min, 2u);
    EXPECT_EQ(rep.c_min_bar, 2u);
    EXPECT_EQ(b.edge_ids(rep.witness_w), std::vector<std::string>{"e1"});
    ASSERT_TRUE(rep.exact.has_value());
    EXPECT_EQ(rep.exact->value, 1u);
    EXPECT_EQ(rep.exact->reason, ExactReason::cmin_equals_cminbar);
    EXPECT_EQ(upper_bound(fixtures::n1(), 1).upper, 1u);
    EXPECT_EQ(upper_bound(b, 0).upper, 2u);
}

TEST(UpperBoundOracle, Examples) {
    const auto b = fixtures::butterfly();
    EXPECT_EQ(upper_bound_oracle(b, 1), 1u);
    EXPECT_EQ(upper_bound_oracle(b, 0), 2u);
    EXPECT_EQ(upper_bound_oracle(fixtures::n1(), 2), 0u);
    std::vector<Network::EdgeSpec> edges;
    for (int i = 0; i < 17; ++i) edges.push_back({"e" + std::to_string(i), "s", "rho"});
    const auto big = Network::build({"s", "rho"}, {"s"}, "rho", edges);
    try {
        upper_bound_oracle(big, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

TEST(ZeroCapacity, Examples) {
    const auto b = fixtures::butterfly();
    EXPECT_TRUE(zero_capacity(b, 2));
    EXPECT_FALSE(zero_capacity(b, 1));
    for (const auto& n : corpus(50)) {
        std::size_t min_out = n.num_edges();
        for (std::size_t i = 0; i < n.num_sources(); ++i) min_out = std::min(min_out, n.out_edges(n.source(i)).size());
        EXPECT_TRUE(zero_capacity(n, min_out));
    }
}

TEST(ExactCapacity, Examples) {
    const auto b = fixtures::butterfly();
    const auto e = exact_capacity(b, 1);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->value, 1u);
    EXPECT_EQ(e->reason, ExactReason::cmin_equals_cminbar);
    const auto n1 = fixtures::n1();
    EXPECT_EQ(exact_capacity(n1, 0)->value, 1u);
    EXPECT_EQ(exact_capacity(n1, 0)->reason, ExactReason::r_zero);
    EXPECT_FALSE(exact_capacity(n1, 1).has_value());
    EXPECT_EQ(exact_capacity(n1, 2)->reason, ExactReason::zero_capacity);
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(lower_bound(fixtures::butterfly(), 1), 1u);
    EXPECT_EQ(lower_bound(fixtures::n1(), 1), 0u);
    EXPECT_EQ(lower_bound(fixtures::butterfly(), 2), 0u);
}

TEST(BoundProperties, UpperBoundMatchesBothOracles) {
    for (const auto& n : corpus(200))
        for (std::size_t r = 0; r <= 3; ++r) {
            const auto ub = upper_bound(n, r).upper;
            ASSERT_EQ(ub, upper_bound_oracle(n, r)) << n.to_json().dump() << " r=" << r;
            if (r <= 2) {
                ASSERT_EQ(ub, oracle::upper_bound(n, r)) << n.to_json().dump() << " r=" << r;
            }
        }
}

TEST(BoundProperties, OmegaMatchesOracleOnPrimarySets) {
    for (const auto& n : corpus(80))
        for (const auto& w : primary_wiretap_sets(n, 2, false))
            ASSERT_EQ(omega(n, w), oracle::omega(n, oracle::to_mask(w))) << n.to_json().dump();
}

TEST(BoundProperties, MonotoneBracketedAndConsistent) {
    for (const auto& n : corpus(200)) {
        const std::size_t cm = c_min(n);
        std::size_t prev = cm;
        for (std::size_t r = 0; r <= std::min<std::size_t>(n.num_edges(), 4); ++r) {
            const auto rep = upper_bound(n, r);
            ASSERT_LE(rep.upper, prev);
            prev = rep.upper;
            ASSERT_LE(rep.lower, rep.upper);
            ASSERT_LE(rep.upper, cm);
            ASSERT_EQ(rep.lower, r >= cm ? 0 : cm - r);
            if (r == 0) {
                ASSERT_EQ(rep.upper, cm);
            }
            if (zero_capacity(n, r)) {
                ASSERT_EQ(rep.upper, 0u);
            }
            if (rep.exact) {
                ASSERT_LE(rep.lower, rep.exact->value);
                ASSERT_EQ(rep.exact->value, rep.upper) << n.to_json().dump() << " r=" << r;
            }
        }
    }
}

TEST(BoundProperties, OmegaOrderingAlongMinimumCuts) {
    for (const auto& n : corpus(100)) {
        for (std::uint32_t w = 1; w < (1u << n.num_edges()); w = w * 5 + 3) {
            const auto ws = oracle::to_set(w & ((1u << n.num_edges()) - 1));
            if (ws.empty() || ws.size() > 3) continue;
            const auto rs = reach_sets(n, ws);
            if (rs.d.empty()) continue;
            const auto u = source_nodes(n, rs.d);
            const auto hat = primary_min_cut(n, u, ws);
            const auto om_w = omega(n, ws);
            const auto om_hat = omega(n, hat);
            for (auto other : oracle::all_min_edge_cuts(n, u, oracle::to_mask(ws))) {
                const auto om_mid = omega(n, oracle::to_set(other));
                ASSERT_LE(om_hat, om_mid);
                ASSERT_LE(om_mid, om_w);
            }
        }
    }
}

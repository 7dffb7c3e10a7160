#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "semigap/boseck.hpp"

using semigap::BoseckTable;
using semigap::CyclicCoverSpec;
using semigap::ErrorCode;
using semigap::Int;
using semigap::RamifiedPlace;
using testutil::error_code_of;

namespace {
std::vector<Int> v(std::initializer_list<Int> xs) { return std::vector<Int>(xs); }
}

TEST_CASE("table for y^5 - y = 1/x^3") {
    const auto t = BoseckTable::build(CyclicCoverSpec(5, 1, {RamifiedPlace{{3}}}));
    CHECK(t.deltas() == v({16}));
    CHECK(t.gamma() == v({3, 2, 2, 1, 0}));
    CHECK(t.rho()[0] == v({1, 3, 0, 2, 4}));
    CHECK(t.genus() == 4);
    CHECK(semigap::gap_sequence(t, 0).values() == v({1, 2, 4, 7}));
    CHECK(semigap::max_gap_one_place(t) == 7);
    CHECK(semigap::is_symmetric_at(t, 0));
    CHECK(semigap::semigroup_from_gaps(t, 0).generators() == v({3, 5}));
}

TEST_CASE("table for two ramified places, p = 3") {
    const auto t = BoseckTable::build(
        CyclicCoverSpec(3, 1, {RamifiedPlace{{1}}, RamifiedPlace{{2}}}));
    CHECK(t.deltas() == v({4, 6}));
    CHECK(t.gamma() == v({3, 2, 0}));
    CHECK(t.genus() == 3);

    CHECK(semigap::gap_sequence(t, 0).values() == v({1, 2, 5}));
    CHECK(semigap::gap_sequence(t, 1).values() == v({1, 2, 4}));

    // Symmetric exactly at place 0: the other delta, 6, is divisible by 3.
    CHECK(semigap::is_symmetric_at(t, 0));
    CHECK_FALSE(semigap::is_symmetric_at(t, 1));
    CHECK(semigap::gap_sequence(t, 0).max_gap() == 2 * t.genus() - 1);

    CHECK(error_code_of([&] { semigap::max_gap_one_place(t); }) ==
          ErrorCode::MultiplePlaces);
    CHECK(error_code_of([&] { semigap::gap_sequence(t, 2); }) ==
          ErrorCode::PlaceOutOfRange);

    // Complement of {1,2,5} is a genus-3 semigroup.
    const auto h = semigap::semigroup_from_gaps(t, 0);
    CHECK(h.genus() == 3);
    CHECK(h.generators() == v({3, 4}));
}

TEST_CASE("tower of height two") {
    const auto t = BoseckTable::build(CyclicCoverSpec(2, 2, {RamifiedPlace{{1, 3}}}));
    CHECK(t.deltas() == v({8}));
    CHECK(t.gamma() == v({2, 1, 1, 0}));
    CHECK(t.rho()[0][0] == 0);
    CHECK(t.genus() == 1);
    CHECK(semigap::gap_sequence(t, 0).values() == v({1}));
    CHECK(semigap::max_gap_one_place(t) == 1);
    CHECK(semigap::semigroup_from_gaps(t, 0).generators() == v({2, 3}));
}

TEST_CASE("genus zero is legal and silent") {
    const auto t = BoseckTable::build(CyclicCoverSpec(3, 1, {RamifiedPlace{{1}}}));
    CHECK(t.deltas() == v({4}));
    CHECK(t.gamma() == v({1, 1, 0}));
    CHECK(t.genus() == 0);
    CHECK(semigap::gap_sequence(t, 0).empty());
    CHECK_FALSE(semigap::max_gap_one_place(t).has_value());
    CHECK(semigap::is_symmetric_at(t, 0));
    CHECK(semigap::semigroup_from_gaps(t, 0).genus() == 0);
}

TEST_CASE("divisibility of the other deltas decides symmetry, not lambda = -1") {
    // Both lambdas at the second place are not congruent to -1 mod 4,
    // yet delta = 8 is divisible by p^n = 4, so place 0 stays symmetric.
    const auto t = BoseckTable::build(
        CyclicCoverSpec(2, 2, {RamifiedPlace{{1, 1}}, RamifiedPlace{{1, 3}}}));
    CHECK(t.deltas() == v({6, 8}));
    CHECK(t.genus() == 4);
    CHECK(semigap::gap_sequence(t, 0).values() == v({1, 2, 3, 7}));
    CHECK(semigap::gap_sequence(t, 1).values() == v({1, 2, 3, 5}));
    CHECK(semigap::is_symmetric_at(t, 0));
    CHECK_FALSE(semigap::is_symmetric_at(t, 1));
}

TEST_CASE("randomized structural properties") {
    const auto specs = testutil::random_cyclic_specs(200, 0x5eed);
    for (const auto& spec : specs) {
        CAPTURE(spec.p());
        CAPTURE(spec.n());
        const auto t = BoseckTable::build(spec);
        const Int pn = spec.pn();

        // Genus identity over k <= p^n - 2 (checked again here on top of
        // the construction-time verification).
        Int morrison = 0;
        for (Int k = 0; k + 1 < pn; ++k) morrison += t.gamma()[static_cast<std::size_t>(k)] - 1;
        CHECK(morrison == t.genus());

        for (std::size_t i = 0; i < spec.place_count(); ++i) {
            // Distinct orders: nu*p^n + rho over the emission range.
            std::set<Int> orders;
            for (Int k = 0; k + 1 < pn; ++k) {
                const Int gamma = t.gamma()[static_cast<std::size_t>(k)];
                const Int rho = t.rho()[i][static_cast<std::size_t>(k)];
                for (Int nu = 0; nu <= gamma - 2; ++nu)
                    CHECK(orders.insert(nu * pn + rho).second);
            }

            // Symmetry coherence with the max gap.
            const auto gaps = semigap::gap_sequence(t, i);
            if (t.genus() > 0)
                CHECK(semigap::is_symmetric_at(t, i) ==
                      (gaps.max_gap() == 2 * t.genus() - 1));
        }

        if (spec.place_count() == 1) {
            // The remainders sweep all residues 0..p^n-2.
            std::set<Int> residues;
            for (Int k = 0; k + 1 < pn; ++k)
                residues.insert(t.rho()[0][static_cast<std::size_t>(k)]);
            CHECK(static_cast<Int>(residues.size()) == pn - 1);
            CHECK(*residues.rbegin() == pn - 2);
        }
    }
}

TEST_CASE("jump data breaking the tower growth condition diverges") {
    // 24 < 5*28, so (28,24) cannot be the jump sequence of a genuine
    // cyclic 25-cover; the invariant table and the generator form then
    // describe different objects and their genera split.
    const CyclicCoverSpec spec(5, 2, {RamifiedPlace{{28, 24}}});
    const auto t = BoseckTable::build(spec);
    CHECK(t.genus() == 316);
    CHECK(semigap::gap_sequence(t, 0).genus() == 316);
    CHECK(semigap::cyclic_semigroup(spec, 0).semigroup.genus() == 196);
}

TEST_CASE("one-place gap complement equals the generator semigroup") {
    const auto specs = testutil::random_tower_specs(100, 0xace);
    for (const auto& spec : specs) {
        const auto t = BoseckTable::build(spec);
        const auto from_table = semigap::semigroup_from_gaps(t, 0);
        const auto from_cover = semigap::cyclic_semigroup(spec, 0);
        CHECK(from_cover.exactness == semigap::Exactness::Exact);
        CHECK(from_table.generators() == from_cover.semigroup.generators());
        CHECK(from_table.genus() == from_cover.semigroup.genus());
        CHECK(from_table.genus() == t.genus());
    }
}

#include "semigap/invariants.hpp"

#include <limits>
#include <string>

namespace semigap {

namespace {

void require_prime(Int p) {
    if (!is_prime(p))
        fail(ErrorCode::InvalidSpec, std::to_string(p) + " is not prime");
}

// p^r, saturating: anything past the largest gap counts as "no gap is
// divisible by it".
Int power_capped(Int p, Int r, Int cap) {
    Int value = 1;
    for (Int e = 0; e < r; ++e) {
        if (value > cap / p) return cap + 1;
        value *= p;
    }
    return value;
}

}  // namespace

Int gaps_divisible_by(const NumericalSemigroup& h, Int p, Int r) {
    require_prime(p);
    if (r < 1)
        fail(ErrorCode::InvalidSpec, "iterate index r must be >= 1");
    if (h.genus() == 0) return 0;
    const Int modulus = power_capped(p, r, h.frobenius());
    const GapSet gaps = h.gaps();
    Int count = 0;
    for (Int a : gaps.values())
        if (a % modulus == 0) ++count;
    return count;
}

bool zero_hasse_witt_consistent(const NumericalSemigroup& h, Int p, Int ell) {
    return gaps_divisible_by(h, p, ell) == 0;
}

Int nilpotency_genus_bound(Int p, Int ell) {
    require_prime(p);
    if (ell < 1)
        fail(ErrorCode::InvalidSpec, "nilpotency rank must be >= 1");
    const Int pl = checked_pow(p, ell, std::numeric_limits<Int>::max() / 4);
    return checked_mul(pl, pl - 1) / 2;
}

Int maximal_point_bound(Int q, Int m) {
    if (smallest_prime_factor(q) == 0 || !is_prime_power_of(q, smallest_prime_factor(q)))
        fail(ErrorCode::InvalidSpec, std::to_string(q) + " is not a prime power");
    if (m < 1)
        fail(ErrorCode::InvalidSpec, "pole number must be >= 1");
    return checked_add(checked_mul(checked_mul(q, q), m), 1);
}

Int genus_bound_maximal(Int q, Int m) {
    if (smallest_prime_factor(q) == 0 || !is_prime_power_of(q, smallest_prime_factor(q)))
        fail(ErrorCode::InvalidSpec, std::to_string(q) + " is not a prime power");
    if (m < 1)
        fail(ErrorCode::InvalidSpec, "pole number must be >= 1");
    return checked_mul(q, m - 1) / 2;
}

bool rational_point_semigroup_check(const NumericalSemigroup& h, Int q) {
    if (smallest_prime_factor(q) == 0 || !is_prime_power_of(q, smallest_prime_factor(q)))
        fail(ErrorCode::InvalidSpec, std::to_string(q) + " is not a prime power");
    return h.contains(q) && h.contains(q + 1);
}

CurveCheckReport check_curve(const CurveCheckInput& input) {
    require_prime(input.p);
    if (input.q && !is_prime_power_of(*input.q, input.p))
        fail(ErrorCode::InvalidSpec,
             std::to_string(*input.q) + " is not a power of p = " + std::to_string(input.p));
    if (input.point_count && !input.q)
        fail(ErrorCode::InvalidSpec, "a claimed point count needs the field size q");

    const NumericalSemigroup& h = input.semigroup;
    CurveCheckReport report;
    report.genus = h.genus();
    report.frobenius = h.frobenius();
    if (h.genus() > 0) report.symmetric = h.is_symmetric();

    if (input.nilpotency) {
        const Int ell = *input.nilpotency;
        NilpotencyReport nil;
        nil.ell = ell;
        for (Int r = 1; r <= ell; ++r)
            nil.divisible_gap_counts.push_back(gaps_divisible_by(h, input.p, r));
        nil.zero_hasse_witt = nil.divisible_gap_counts.back() == 0;
        nil.genus_bound = nilpotency_genus_bound(input.p, ell);
        nil.genus_within_bound = h.genus() <= nil.genus_bound;
        const Int pl = checked_pow(input.p, ell, std::numeric_limits<Int>::max() / 4);
        if (pl <= h.genus() && h.contains(pl))
            nil.non_classical = NonClassical::Forced;
        else if (ell == 1 && h.genus() == input.p - 1)
            // Open boundary case for a vanishing Cartier operator.
            nil.non_classical = NonClassical::Inconclusive;
        else
            nil.non_classical = NonClassical::NotForced;
        report.nilpotency = nil;
    }

    if (input.q) {
        const Int q = *input.q;
        MaximalityReport max;
        max.q = q;
        // The bounds hold for every pole number, so the multiplicity
        // gives the tightest ones.
        max.point_bound = maximal_point_bound(q, h.multiplicity());
        max.genus_bound = genus_bound_maximal(q, h.multiplicity());
        max.has_q_and_q_plus_one = rational_point_semigroup_check(h, q);
        max.genus_within_bound = h.genus() <= max.genus_bound;
        max.consistent = max.has_q_and_q_plus_one && max.genus_within_bound;
        if (input.point_count) {
            max.points_within_bound = *input.point_count <= max.point_bound;
            max.consistent = max.consistent && *max.points_within_bound;
        }
        report.maximality = max;
    }
    return report;
}

}  // namespace semigap

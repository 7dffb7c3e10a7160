#pragma once

#include <optional>

#include "semigap/semigroup.hpp"

namespace semigap {

/// Number of gaps divisible by p^r.  The rank of the r-th Hasse-Witt
/// iterate is at least this, so the return value is a lower bound, not
/// the rank itself.
Int gaps_divisible_by(const NumericalSemigroup& h, Int p, Int r);

/// True iff no gap is divisible by p^ell, i.e. the semigroup is
/// consistent with the ell-th Cartier iterate vanishing (every multiple
/// of p^ell is then a pole number).
bool zero_hasse_witt_consistent(const NumericalSemigroup& h, Int p, Int ell);

/// Genus bound p^ell*(p^ell - 1)/2 for a curve whose Cartier operator
/// has nilpotency rank ell.
Int nilpotency_genus_bound(Int p, Int ell);

/// Point-count bound q^2 * m + 1 for a maximal curve over F_{q^2} with
/// pole number m at a rational point.
Int maximal_point_bound(Int q, Int m);

/// Genus bound floor(q*(m-1)/2) under the same hypotheses.
Int genus_bound_maximal(Int q, Int m);

/// q and q+1 are pole numbers at every rational point of a maximal
/// curve over F_{q^2}; screens candidate semigroups.
bool rational_point_semigroup_check(const NumericalSemigroup& h, Int q);

struct CurveCheckInput {
    NumericalSemigroup semigroup;
    Int p;
    std::optional<Int> q;            // prime power of p
    std::optional<Int> nilpotency;   // claimed Cartier nilpotency rank
    std::optional<Int> point_count;  // claimed number of F_{q^2}-points
};

enum class NonClassical {
    Forced,        // p^ell <= g and p^ell is a pole number
    NotForced,
    Inconclusive,  // zero Cartier operator with g = p-1: open boundary case
};

struct NilpotencyReport {
    Int ell = 0;
    std::vector<Int> divisible_gap_counts;  // counts for r = 1..ell
    bool zero_hasse_witt = false;
    Int genus_bound = 0;
    bool genus_within_bound = false;
    NonClassical non_classical = NonClassical::NotForced;
};

struct MaximalityReport {
    Int q = 0;
    Int point_bound = 0;          // tightest bound, taken at the multiplicity
    Int genus_bound = 0;
    bool has_q_and_q_plus_one = false;
    bool genus_within_bound = false;
    std::optional<bool> points_within_bound;  // set when a point count was claimed
    bool consistent = false;
};

struct CurveCheckReport {
    Int genus = 0;
    Int frobenius = 0;
    std::optional<bool> symmetric;  // empty for genus 0
    std::optional<NilpotencyReport> nilpotency;
    std::optional<MaximalityReport> maximality;
};

CurveCheckReport check_curve(const CurveCheckInput& input);

}  // namespace semigap

#include "semigap/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace semigap {

ArtinSchreierCover::ArtinSchreierCover(Int p, Int h, Int m, GapSet base_gaps,
                                       Int size_guard)
    : p_(p), h_(h), m_(m), base_gaps_(std::move(base_gaps)) {
    if (!is_prime(p))
        fail(ErrorCode::InvalidCover, std::to_string(p) + " is not prime");
    if (h < 1)
        fail(ErrorCode::InvalidCover, "extension exponent h must be >= 1");
    if (m < 1)
        fail(ErrorCode::InvalidCover, "pole order m must be >= 1");
    if (m % p == 0)
        fail(ErrorCode::InvalidCover,
             "pole order " + std::to_string(m) + " is divisible by p = " + std::to_string(p));
    q_ = checked_pow(p, h, size_guard);
}

Int ArtinSchreierCover::genus() const {
    return checked_mul(q_, base_genus()) + (m_ - 1) * (q_ - 1) / 2;
}

LewittesGaps lewittes_gaps(const ArtinSchreierCover& cover) {
    const Int q = cover.q();
    const Int m = cover.m();
    const Int g0 = cover.base_genus();

    std::set<Int> gaps;
    auto insert_distinct = [&](Int value) {
        if (!gaps.insert(value).second)
            fail(ErrorCode::InternalInconsistency,
                 "gap families collide at " + std::to_string(value));
    };

    for (Int i = 1; i < q; ++i) {
        const Int mi = checked_mul(m, i);
        for (Int j = 1; j <= mi / q; ++j) insert_distinct(mi - j * q);
    }
    // Families indexed by i are separated by their residue m*i mod q, so
    // the i = 0 term below cannot collide with the quotient family above.
    for (Int i = 0; i < q; ++i) {
        const Int mi = checked_mul(m, i);
        for (Int hj : cover.base_gaps().values())
            insert_distinct(checked_add(mi, checked_mul(q, hj)));
    }

    const Int genus = cover.genus();
    if (static_cast<Int>(gaps.size()) != genus)
        fail(ErrorCode::InternalInconsistency,
             "gap count " + std::to_string(gaps.size()) +
                 " differs from the Riemann-Hurwitz genus " + std::to_string(genus));

    LewittesGaps out;
    out.gaps = GapSet(std::vector<Int>(gaps.begin(), gaps.end()));
    out.zero_index_included = g0 > 0;

    // m is always a pole number; so is q over a rational base.  With
    // positive base genus the i=0 term makes q*h_1 = q a gap whenever 1
    // is a base gap, so the q check applies only to the g0 = 0 case.
    if (out.gaps.contains(m) || (g0 == 0 && out.gaps.contains(q)))
        fail(ErrorCode::InternalInconsistency, "expected pole number found among gaps");
    for (Int hj : cover.base_gaps().values())
        if (!out.gaps.contains(checked_mul(q, hj)))
            fail(ErrorCode::InternalInconsistency,
                 "q*h_j missing from gap set for base gap " + std::to_string(hj));
    return out;
}

CyclicCoverSpec::CyclicCoverSpec(Int p, Int n, std::vector<RamifiedPlace> places,
                                 Int size_guard)
    : p_(p), n_(n), places_(std::move(places)) {
    if (!is_prime(p))
        fail(ErrorCode::InvalidSpec, std::to_string(p) + " is not prime");
    if (n < 1)
        fail(ErrorCode::InvalidSpec, "tower height n must be >= 1");
    if (places_.empty())
        fail(ErrorCode::InvalidSpec, "at least one ramified place is required");
    pn_ = checked_pow(p, n, size_guard);
    for (const RamifiedPlace& place : places_) {
        if (static_cast<Int>(place.lambdas.size()) != n)
            fail(ErrorCode::InvalidSpec,
                 "each place needs exactly n = " + std::to_string(n) + " jump values");
        for (Int lambda : place.lambdas) {
            if (lambda < 1)
                fail(ErrorCode::InvalidSpec, "jump values must be >= 1");
            if (lambda % p == 0)
                fail(ErrorCode::InvalidSpec,
                     "jump value " + std::to_string(lambda) +
                         " is divisible by p = " + std::to_string(p));
        }
    }
}

Int CyclicCoverSpec::lambda(std::size_t place, Int layer) const {
    return places_[place].lambdas[static_cast<std::size_t>(layer - 1)];
}

CoverSemigroup cyclic_semigroup(const CyclicCoverSpec& spec, std::size_t place_index,
                                Int size_guard) {
    if (place_index >= spec.place_count())
        fail(ErrorCode::PlaceOutOfRange,
             "place index " + std::to_string(place_index) + " out of range");
    std::vector<Int> gens{spec.pn()};
    Int weight = spec.pn();
    for (Int j = 1; j <= spec.n(); ++j) {
        weight /= spec.p();
        gens.push_back(checked_mul(weight, spec.lambda(place_index, j)));
    }
    return CoverSemigroup{
        NumericalSemigroup::from_generators(gens, size_guard),
        spec.place_count() == 1 ? Exactness::Exact : Exactness::UpperBound,
    };
}

std::pair<Int, Int> two_cover_jumps(Int m1, Int m2, Int p) {
    if (!is_prime(p))
        fail(ErrorCode::InvalidSpec, std::to_string(p) + " is not prime");
    if (m1 < 1 || m1 >= m2)
        fail(ErrorCode::InvalidConductors, "conductors must satisfy 0 < m1 < m2");
    if (m1 % p == 0 || m2 % p == 0)
        fail(ErrorCode::InvalidConductors, "conductors must be coprime to p");
    return {m1, checked_add(m1, checked_mul(p, m2 - m1))};
}

std::vector<Int> ramification_jump_candidates(const NumericalSemigroup& h, Int p) {
    if (!is_prime(p))
        fail(ErrorCode::InvalidSpec, std::to_string(p) + " is not prime");
    // A window of p consecutive integers at 2*genus contains a member
    // coprime to p, so the search below this cap always succeeds.
    const Int cap = std::max<Int>(2 * h.genus() + 1, 3);
    Int m = -1;
    for (Int n = 2; n <= cap; ++n) {
        if (n % p != 0 && h.contains(n)) {
            m = n;
            break;
        }
    }
    if (m < 0)
        fail(ErrorCode::NoCoprimeMember,
             "no member above 1 coprime to " + std::to_string(p) + " was found");
    std::vector<Int> candidates;
    for (Int mk = m - 1; mk >= 0; --mk)
        if (h.contains(mk)) candidates.push_back(m - mk);
    std::sort(candidates.begin(), candidates.end());
    return candidates;
}

}  // namespace semigap

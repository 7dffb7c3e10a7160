#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "semigap/semigroup.hpp"

namespace semigap {

/// Degree-p^h extension y^{p^h} - y = G of a base function field, with
/// G having its only pole, of order m coprime to p, at the marked
/// place.  base_gaps is the gap set of the base field at that place
/// (empty for a rational base).
class ArtinSchreierCover {
  public:
    ArtinSchreierCover(Int p, Int h, Int m, GapSet base_gaps = GapSet(),
                       Int size_guard = kDefaultSizeGuard);

    Int p() const noexcept { return p_; }
    Int h() const noexcept { return h_; }
    Int m() const noexcept { return m_; }
    Int q() const noexcept { return q_; }
    const GapSet& base_gaps() const noexcept { return base_gaps_; }
    Int base_genus() const noexcept { return base_gaps_.genus(); }

    /// Riemann-Hurwitz genus of the total space:
    /// q*g0 + (m-1)(q-1)/2.
    Int genus() const;

  private:
    Int p_, h_, m_, q_;
    GapSet base_gaps_;
};

struct LewittesGaps {
    GapSet gaps;
    /// The i=0 term of the {m*i + q*h_j} family is included whenever the
    /// base genus is positive; without it the count falls short of the
    /// Riemann-Hurwitz genus.
    bool zero_index_included = false;
};

/// Gap set at the unique place above the pole of G:
///   union over i of {m*i - j*q : 1 <= j <= floor(m*i/q)}  (i = 1..q-1)
///   union over i of {m*i + q*h_j : j = 1..g0}             (i = 0..q-1)
/// The result size is checked against the Riemann-Hurwitz genus.
LewittesGaps lewittes_gaps(const ArtinSchreierCover& cover);

/// Ramification data of a cyclic p^n cover of the rational function
/// field, one lambda per tower layer and ramified place, each coprime
/// to p (standard form).
struct RamifiedPlace {
    std::vector<Int> lambdas;
};

class CyclicCoverSpec {
  public:
    CyclicCoverSpec(Int p, Int n, std::vector<RamifiedPlace> places,
                    Int size_guard = kDefaultSizeGuard);

    Int p() const noexcept { return p_; }
    Int n() const noexcept { return n_; }
    Int pn() const noexcept { return pn_; }
    const std::vector<RamifiedPlace>& places() const noexcept { return places_; }
    std::size_t place_count() const noexcept { return places_.size(); }

    /// lambda_{i,j} with 1-based layer j.
    Int lambda(std::size_t place, Int layer) const;

  private:
    Int p_, n_, pn_;
    std::vector<RamifiedPlace> places_;
};

enum class Exactness { Exact, UpperBound };

struct CoverSemigroup {
    NumericalSemigroup semigroup;
    /// Exact when the spec has a single ramified place; otherwise the
    /// generator form only bounds the true semigroup from above.
    Exactness exactness;
};

/// <p^n, p^{n-1}*lambda_1, ..., lambda_n> for the chosen place.
CoverSemigroup cyclic_semigroup(const CyclicCoverSpec& spec, std::size_t place_index,
                                Int size_guard = kDefaultSizeGuard);

/// Ramification-filtration jumps of the (Z/p)^2 cover assembled from
/// two Artin-Schreier covers with conductors m1 < m2, both coprime to
/// p: the jumps sit at m1 and m1 + p*(m2 - m1).
std::pair<Int, Int> two_cover_jumps(Int m1, Int m2, Int p);

/// Candidate ramification jumps {m - m_k} where m is the least member
/// above 1 coprime to p and m_k runs over the members below m.
std::vector<Int> ramification_jump_candidates(const NumericalSemigroup& h, Int p);

}  // namespace semigap

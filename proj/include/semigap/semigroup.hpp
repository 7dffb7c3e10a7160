#pragma once

#include <span>
#include <vector>

#include "semigap/errors.hpp"

namespace semigap {

/// Strictly increasing finite set of positive integers, subject to the
/// Weierstrass bound: a gap set of genus g has no gap above 2g-1.
class GapSet {
  public:
    GapSet() = default;
    explicit GapSet(std::vector<Int> gaps);

    bool empty() const noexcept { return gaps_.empty(); }
    Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
    const std::vector<Int>& values() const noexcept { return gaps_; }

    /// Largest gap; requires a nonempty set.
    Int max_gap() const;

    bool contains(Int n) const;

    friend bool operator==(const GapSet&, const GapSet&) = default;

  private:
    std::vector<Int> gaps_;
};

/// Cofinite submonoid of the nonnegative integers, stored as a boolean
/// membership table covering [0, conductor + max generator].  Immutable
/// after construction; all queries are const.
class NumericalSemigroup {
  public:
    /// Closure of the given generators under addition.  The input list
    /// need not be minimal; minimal generators are recomputed from the
    /// membership table.  gcd != 1 is rejected, not reduced.
    static NumericalSemigroup from_generators(std::span<const Int> gens,
                                              Int size_guard = kDefaultSizeGuard);
    static NumericalSemigroup from_generators(std::initializer_list<Int> gens,
                                              Int size_guard = kDefaultSizeGuard);

    /// Complement of an explicit gap set.  Verifies closure under
    /// addition and rejects non-semigroup complements.
    static NumericalSemigroup from_gaps(const GapSet& gaps,
                                        Int size_guard = kDefaultSizeGuard);

    bool contains(Int n) const;

    /// Non-members in [1, conductor-1]; |gaps| == genus.
    GapSet gaps() const;

    /// True iff the largest gap equals 2*genus - 1.  When true, the
    /// pointwise relation n in H <=> 2g-1-n not in H is verified over
    /// the whole window.  Undefined for genus 0.
    bool is_symmetric() const;

    /// Least member of each residue class mod d (d must be a member).
    /// Entry 0 is always 0.
    std::vector<Int> apery_set(Int d) const;

    const std::vector<Int>& generators() const noexcept { return generators_; }
    Int conductor() const noexcept { return conductor_; }
    Int genus() const noexcept { return genus_; }

    /// Largest gap, i.e. conductor - 1; -1 for the full monoid.
    Int frobenius() const noexcept { return conductor_ - 1; }

    /// Least nonzero member.
    Int multiplicity() const noexcept { return generators_.front(); }

    /// Members in [0, limit], ascending.
    std::vector<Int> members_up_to(Int limit) const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }

  private:
    NumericalSemigroup() = default;

    std::vector<Int> generators_;
    std::vector<bool> membership_;  // indices 0..conductor+max(gens)
    Int conductor_ = 0;
    Int genus_ = 0;
};

/// Image c*H of a semigroup under scaling.  Not itself a numerical
/// semigroup for c > 1 (the complement is infinite), so it only offers
/// membership and bounded enumeration.
class ScaledSemigroup {
  public:
    ScaledSemigroup(NumericalSemigroup base, Int factor);

    Int factor() const noexcept { return factor_; }
    bool contains(Int n) const;
    std::vector<Int> values_up_to(Int bound) const;

    /// Whether every element of c*H lies in the candidate semigroup.
    /// Finite check: elements at or above the candidate's conductor are
    /// members automatically.
    bool subset_of(const NumericalSemigroup& candidate) const;

  private:
    NumericalSemigroup base_;
    Int factor_;
};

ScaledSemigroup scale(const NumericalSemigroup& h, Int factor);

/// Largest gap of <d1,d2> for coprime d1,d2 >= 2: d1*d2 - d1 - d2.
Int frobenius_two_gen(Int d1, Int d2);

/// Genus of <d1,d2> for coprime d1,d2 >= 2: (d1-1)(d2-1)/2.
Int genus_two_gen(Int d1, Int d2);

}  // namespace semigap

#pragma once

#include <optional>

#include "semigap/covers.hpp"

namespace semigap {

/// Per-cover invariant table for a cyclic p^n cover of the rational
/// function field, totally ramified at the listed places.
///
/// With k = a_1 + a_2*p + ... + a_n*p^{n-1} (0 <= a_j < p) and
/// delta_i = (p-1) * sum_j (lambda_{i,j} + 1) * p^{n-j}:
///
///   nu_{ik}  = floor((delta_i - sum_j a_j * lambda_{i,j} * p^{n-j}) / p^n)
///   rho_i(k) = (delta_i - sum_j a_j * lambda_{i,j} * p^{n-j}) - nu_{ik} * p^n
///   Gamma_k  = sum_i nu_{ik}
///
/// and the genus obeys 2g - 2 = -2*p^n + sum_i delta_i.
class BoseckTable {
  public:
    static BoseckTable build(const CyclicCoverSpec& spec);

    const CyclicCoverSpec& spec() const noexcept { return spec_; }
    const std::vector<Int>& deltas() const noexcept { return deltas_; }
    const std::vector<std::vector<Int>>& digits() const noexcept { return digits_; }
    const std::vector<std::vector<Int>>& nu() const noexcept { return nu_; }
    const std::vector<Int>& gamma() const noexcept { return gamma_; }
    const std::vector<std::vector<Int>>& rho() const noexcept { return rho_; }
    Int genus() const noexcept { return genus_; }
    std::size_t place_count() const noexcept { return spec_.place_count(); }

  private:
    explicit BoseckTable(CyclicCoverSpec spec) : spec_(std::move(spec)) {}

    CyclicCoverSpec spec_;
    std::vector<Int> deltas_;               // [place]
    std::vector<std::vector<Int>> digits_;  // [k][layer-1]
    std::vector<std::vector<Int>> nu_;      // [place][k]
    std::vector<Int> gamma_;                // [k]
    std::vector<std::vector<Int>> rho_;     // [place][k]
    Int genus_ = 0;
};

/// Gap sequence at the chosen ramified place:
/// {nu*p^n + rho_i(k) + 1 : 0 <= k <= p^n-2, 0 <= nu <= Gamma_k - 2}.
/// Indices with Gamma_k <= 1 contribute nothing; the count always
/// equals the genus.
GapSet gap_sequence(const BoseckTable& table, std::size_t place_index);

/// delta - 2*p^n + 1 for a single ramified place, which is also
/// 2*genus - 1 by symmetry.  Empty for genus 0 (no gaps at all).
std::optional<Int> max_gap_one_place(const BoseckTable& table);

/// Whether the semigroup at the chosen place is symmetric: true iff
/// delta_{i'} is divisible by p^n for every other place i'
/// (equivalently rho_{i'}(0) = 0).  Single-place covers are always
/// symmetric.  Checked against max gap == 2*genus - 1.
bool is_symmetric_at(const BoseckTable& table, std::size_t place_index);

/// Numerical semigroup whose gap set is gap_sequence(table, place).
NumericalSemigroup semigroup_from_gaps(const BoseckTable& table, std::size_t place_index,
                                       Int size_guard = kDefaultSizeGuard);

}  // namespace semigap

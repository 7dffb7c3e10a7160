#include "semigap/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace semigap {

namespace {

// Unbounded coin-problem closure: reach[x] = true iff x is a
// nonnegative integer combination of the coins.  Indices 0..bound.
std::vector<bool> closure_table(const std::vector<Int>& coins, Int bound) {
    std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
    reach[0] = true;
    for (Int c : coins) {
        if (c > bound) continue;
        for (Int x = c; x <= bound; ++x)
            if (reach[static_cast<std::size_t>(x - c)]) reach[static_cast<std::size_t>(x)] = true;
    }
    return reach;
}

// Least n such that the table holds `run` consecutive members starting
// at n.  Returns -1 when no such window fits below the bound.
Int least_full_run(const std::vector<bool>& table, Int run) {
    Int streak = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        streak = table[i] ? streak + 1 : 0;
        if (streak == run) return static_cast<Int>(i) - run + 1;
    }
    return -1;
}

struct GeneratorScan {
    std::vector<Int> generators;
    bool closed = true;
    Int violation = -1;  // first integer reachable from members yet marked non-member
};

// Walks the membership table in ascending order, collecting members not
// representable as sums of earlier members.  With validate=true it also
// reports the first reachable non-member, which certifies that the table
// is not closed under addition.
GeneratorScan scan_minimal_generators(const std::vector<bool>& table, Int conductor,
                                      bool validate) {
    GeneratorScan out;
    const Int limit = static_cast<Int>(table.size()) - 1;
    std::vector<bool> reach(table.size(), false);
    reach[0] = true;
    Int scan_end = limit;
    for (Int m = 1; m <= scan_end; ++m) {
        const auto idx = static_cast<std::size_t>(m);
        if (table[idx] && !reach[idx]) {
            out.generators.push_back(m);
            if (out.generators.size() == 1)
                scan_end = std::min(limit, conductor + m - 1);
            for (Int x = m; x <= limit; ++x)
                if (reach[static_cast<std::size_t>(x - m)]) reach[static_cast<std::size_t>(x)] = true;
        } else if (validate && !table[idx] && reach[idx]) {
            out.closed = false;
            out.violation = m;
            return out;
        }
    }
    return out;
}

}  // namespace

GapSet::GapSet(std::vector<Int> gaps) : gaps_(std::move(gaps)) {
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        if (gaps_[i] < 1)
            fail(ErrorCode::InvalidGapSet, "gap values must be positive");
        if (i > 0 && gaps_[i] <= gaps_[i - 1])
            fail(ErrorCode::InvalidGapSet, "gap values must be strictly increasing");
    }
    if (!gaps_.empty()) {
        const Int g = genus();
        if (gaps_.back() > 2 * g - 1)
            fail(ErrorCode::InvalidGapSet,
                 "largest gap " + std::to_string(gaps_.back()) + " exceeds 2g-1 = " +
                     std::to_string(2 * g - 1));
    }
}

Int GapSet::max_gap() const {
    if (gaps_.empty())
        fail(ErrorCode::GenusZero, "empty gap set has no largest gap");
    return gaps_.back();
}

bool GapSet::contains(Int n) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), n);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens,
                                                       Int size_guard) {
    if (gens.empty())
        fail(ErrorCode::EmptyGenerators, "at least one generator is required");
    std::vector<Int> sorted(gens.begin(), gens.end());
    for (Int g : sorted)
        if (g < 1)
            fail(ErrorCode::InvalidGenerator,
                 "generator " + std::to_string(g) + " is not a positive integer");
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Int g = 0;
    for (Int v : sorted) g = std::gcd(g, v);
    if (g != 1)
        fail(ErrorCode::GcdNotOne,
             "generators share the common factor " + std::to_string(g));

    const Int mult = sorted.front();
    const Int maxg = sorted.back();
    if (maxg >= size_guard)
        fail(ErrorCode::SizeGuardExceeded,
             "generator " + std::to_string(maxg) + " is at or above the size guard " +
                 std::to_string(size_guard));

    Int bound = std::max<Int>(64, 2 * maxg);
    std::vector<bool> table;
    Int conductor = -1;
    for (;;) {
        if (bound + 1 > size_guard)
            fail(ErrorCode::SizeGuardExceeded,
                 "membership table would need " + std::to_string(bound + 1) +
                     " entries, above the size guard " + std::to_string(size_guard));
        table = closure_table(sorted, bound);
        conductor = least_full_run(table, mult);
        if (conductor >= 0) {
            const Int needed = checked_add(conductor, maxg);
            if (needed <= bound) {
                table.resize(static_cast<std::size_t>(needed) + 1);
                break;
            }
            bound = needed;
        } else {
            bound = checked_mul(bound, 2);
        }
    }

    NumericalSemigroup h;
    h.conductor_ = conductor;
    h.membership_ = std::move(table);
    h.genus_ = 0;
    for (Int n = 1; n < conductor; ++n)
        if (!h.membership_[static_cast<std::size_t>(n)]) ++h.genus_;
    if (conductor >= 1 && h.membership_[static_cast<std::size_t>(conductor - 1)])
        fail(ErrorCode::InternalInconsistency, "conductor is not minimal");
    h.generators_ = scan_minimal_generators(h.membership_, conductor, false).generators;
    return h;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> gens,
                                                       Int size_guard) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()), size_guard);
}

NumericalSemigroup NumericalSemigroup::from_gaps(const GapSet& gaps, Int size_guard) {
    const Int conductor = gaps.empty() ? 0 : gaps.max_gap() + 1;
    const Int limit = std::max<Int>(checked_mul(conductor, 2), 1);
    if (limit + 1 > size_guard)
        fail(ErrorCode::SizeGuardExceeded,
             "membership table would need " + std::to_string(limit + 1) +
                 " entries, above the size guard " + std::to_string(size_guard));
    std::vector<bool> table(static_cast<std::size_t>(limit) + 1, true);
    for (Int a : gaps.values()) table[static_cast<std::size_t>(a)] = false;

    const GeneratorScan scan = scan_minimal_generators(table, conductor, true);
    if (!scan.closed)
        fail(ErrorCode::NotASemigroup,
             "complement is not closed under addition: " + std::to_string(scan.violation) +
                 " is a sum of members but listed as a gap");

    NumericalSemigroup h;
    h.conductor_ = conductor;
    h.genus_ = gaps.genus();
    h.generators_ = scan.generators;
    const Int keep = conductor + h.generators_.back();
    table.resize(static_cast<std::size_t>(std::min(limit, keep)) + 1);
    h.membership_ = std::move(table);
    return h;
}

bool NumericalSemigroup::contains(Int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return membership_[static_cast<std::size_t>(n)];
}

GapSet NumericalSemigroup::gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (Int n = 1; n < conductor_; ++n)
        if (!membership_[static_cast<std::size_t>(n)]) out.push_back(n);
    GapSet result(std::move(out));
    if (result.genus() != genus_)
        fail(ErrorCode::InternalInconsistency, "gap count disagrees with stored genus");
    return result;
}

bool NumericalSemigroup::is_symmetric() const {
    if (genus_ == 0)
        fail(ErrorCode::GenusZero, "symmetry is undefined for the full monoid");
    const bool symmetric = frobenius() == 2 * genus_ - 1;
    if (symmetric) {
        // n in H <=> 2g-1-n not in H, over the whole window.
        for (Int n = 0; n <= 2 * genus_ - 1; ++n)
            if (contains(n) == contains(2 * genus_ - 1 - n))
                fail(ErrorCode::InternalInconsistency,
                     "symmetry relation fails at n = " + std::to_string(n));
    }
    return symmetric;
}

std::vector<Int> NumericalSemigroup::apery_set(Int d) const {
    if (d < 1 || !contains(d))
        fail(ErrorCode::NotMember,
             std::to_string(d) + " is not a nonzero member of the semigroup");
    std::vector<Int> least(static_cast<std::size_t>(d), -1);
    Int remaining = d;
    for (Int n = 0; remaining > 0; ++n) {
        auto& slot = least[static_cast<std::size_t>(n % d)];
        if (slot < 0 && contains(n)) {
            slot = n;
            --remaining;
        }
    }
    // floor(b_mu/d) counts the gaps in residue class mu.
    std::vector<Int> gaps_in_class(static_cast<std::size_t>(d), 0);
    for (Int n = 1; n < conductor_; ++n)
        if (!membership_[static_cast<std::size_t>(n)]) ++gaps_in_class[static_cast<std::size_t>(n % d)];
    for (Int mu = 0; mu < d; ++mu)
        if (least[static_cast<std::size_t>(mu)] / d != gaps_in_class[static_cast<std::size_t>(mu)])
            fail(ErrorCode::InternalInconsistency,
                 "Apery entry in class " + std::to_string(mu) + " disagrees with gap count");
    return least;
}

std::vector<Int> NumericalSemigroup::members_up_to(Int limit) const {
    std::vector<Int> out;
    for (Int n = 0; n <= limit; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

ScaledSemigroup::ScaledSemigroup(NumericalSemigroup base, Int factor)
    : base_(std::move(base)), factor_(factor) {
    if (factor < 1)
        fail(ErrorCode::InvalidSpec, "scaling factor must be >= 1");
}

bool ScaledSemigroup::contains(Int n) const {
    if (n < 0 || n % factor_ != 0) return false;
    return base_.contains(n / factor_);
}

std::vector<Int> ScaledSemigroup::values_up_to(Int bound) const {
    std::vector<Int> out;
    if (bound < 0) return out;
    for (Int h = 0; h <= bound / factor_; ++h)
        if (base_.contains(h)) out.push_back(h * factor_);
    return out;
}

bool ScaledSemigroup::subset_of(const NumericalSemigroup& candidate) const {
    if (candidate.conductor() == 0) return true;
    const Int top = (candidate.conductor() - 1) / factor_;
    for (Int h = 0; h <= top; ++h)
        if (base_.contains(h) && !candidate.contains(checked_mul(h, factor_)))
            return false;
    return true;
}

ScaledSemigroup scale(const NumericalSemigroup& h, Int factor) {
    return ScaledSemigroup(h, factor);
}

namespace {

void require_two_gen(Int d1, Int d2) {
    if (d1 < 2 || d2 < 2)
        fail(ErrorCode::DegenerateGenerator, "both generators must be >= 2");
    if (std::gcd(d1, d2) != 1)
        fail(ErrorCode::NotCoprime,
             std::to_string(d1) + " and " + std::to_string(d2) + " are not coprime");
}

}  // namespace

Int frobenius_two_gen(Int d1, Int d2) {
    require_two_gen(d1, d2);
    return checked_mul(d1, d2) - d1 - d2;
}

Int genus_two_gen(Int d1, Int d2) {
    require_two_gen(d1, d2);
    return checked_mul(d1 - 1, d2 - 1) / 2;
}

}  // namespace semigap

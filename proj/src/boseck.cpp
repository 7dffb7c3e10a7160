#include "semigap/boseck.hpp"

#include <algorithm>
#include <string>

namespace semigap {

namespace {

void require_place(const BoseckTable& table, std::size_t place_index) {
    if (place_index >= table.place_count())
        fail(ErrorCode::PlaceOutOfRange,
             "place index " + std::to_string(place_index) + " out of range");
}

// delta_i + v(w_k) = delta_i - sum_j a_j * lambda_{i,j} * p^{n-j}
Int shifted_valuation(const CyclicCoverSpec& spec, const std::vector<Int>& digits,
                      Int delta, std::size_t place) {
    Int s = delta;
    Int weight = spec.pn();
    for (Int j = 1; j <= spec.n(); ++j) {
        weight /= spec.p();
        s -= digits[static_cast<std::size_t>(j - 1)] * spec.lambda(place, j) * weight;
    }
    return s;
}

}  // namespace

BoseckTable BoseckTable::build(const CyclicCoverSpec& spec) {
    BoseckTable t(spec);
    const Int p = spec.p();
    const Int n = spec.n();
    const Int pn = spec.pn();
    const std::size_t s = spec.place_count();

    t.deltas_.reserve(s);
    Int delta_sum = 0;
    for (std::size_t i = 0; i < s; ++i) {
        Int delta = 0;
        Int weight = pn;
        for (Int j = 1; j <= n; ++j) {
            weight /= p;
            delta = checked_add(delta, checked_mul(checked_add(t.spec_.lambda(i, j), 1), weight));
        }
        delta = checked_mul(delta, p - 1);
        t.deltas_.push_back(delta);
        delta_sum = checked_add(delta_sum, delta);
    }

    const Int twice_genus = delta_sum - 2 * pn + 2;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        fail(ErrorCode::InvalidSpec,
             "ramification data is not realizable: 2g = " + std::to_string(twice_genus));
    t.genus_ = twice_genus / 2;

    t.digits_.resize(static_cast<std::size_t>(pn));
    t.nu_.assign(s, std::vector<Int>(static_cast<std::size_t>(pn)));
    t.rho_.assign(s, std::vector<Int>(static_cast<std::size_t>(pn)));
    t.gamma_.assign(static_cast<std::size_t>(pn), 0);

    for (Int k = 0; k < pn; ++k) {
        auto& digits = t.digits_[static_cast<std::size_t>(k)];
        digits.resize(static_cast<std::size_t>(n));
        Int rest = k;
        for (Int j = 0; j < n; ++j) {
            digits[static_cast<std::size_t>(j)] = rest % p;
            rest /= p;
        }
        for (std::size_t i = 0; i < s; ++i) {
            const Int sv = shifted_valuation(spec, digits, t.deltas_[i], i);
            const Int nu = sv / pn;  // sv > 0, see below
            const Int rho = sv - nu * pn;
            if (sv <= 0 || rho < 0 || rho >= pn)
                fail(ErrorCode::InternalInconsistency, "remainder out of range");
            t.nu_[i][static_cast<std::size_t>(k)] = nu;
            t.rho_[i][static_cast<std::size_t>(k)] = rho;
            t.gamma_[static_cast<std::size_t>(k)] += nu;
        }
    }

    // Gamma_0 dominates, and the Morrison count sum(Gamma_k - 1) over
    // k <= p^n - 2 recovers the genus.
    Int morrison = 0;
    for (Int k = 0; k < pn; ++k) {
        if (t.gamma_[static_cast<std::size_t>(k)] > t.gamma_[0])
            fail(ErrorCode::InternalInconsistency, "Gamma_0 is not maximal");
        if (k <= pn - 2) morrison += t.gamma_[static_cast<std::size_t>(k)] - 1;
    }
    if (morrison != t.genus_)
        fail(ErrorCode::InternalInconsistency,
             "sum(Gamma_k - 1) = " + std::to_string(morrison) +
                 " does not match the genus " + std::to_string(t.genus_));
    return t;
}

GapSet gap_sequence(const BoseckTable& table, std::size_t place_index) {
    require_place(table, place_index);
    const Int pn = table.spec().pn();
    std::vector<Int> gaps;
    gaps.reserve(static_cast<std::size_t>(table.genus()));
    for (Int k = 0; k <= pn - 2; ++k) {
        const Int gamma = table.gamma()[static_cast<std::size_t>(k)];
        const Int rho = table.rho()[place_index][static_cast<std::size_t>(k)];
        for (Int nu = 0; nu <= gamma - 2; ++nu) gaps.push_back(nu * pn + rho + 1);
    }
    std::sort(gaps.begin(), gaps.end());
    if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end())
        fail(ErrorCode::InternalInconsistency, "gap orders are not pairwise distinct");
    if (static_cast<Int>(gaps.size()) != table.genus())
        fail(ErrorCode::InternalInconsistency,
             "gap count does not match the genus at place " + std::to_string(place_index));
    return GapSet(std::move(gaps));
}

std::optional<Int> max_gap_one_place(const BoseckTable& table) {
    if (table.place_count() != 1)
        fail(ErrorCode::MultiplePlaces, "defined only for a single ramified place");
    if (table.genus() == 0) return std::nullopt;
    const Int value = table.deltas()[0] - 2 * table.spec().pn() + 1;
    if (value != gap_sequence(table, 0).max_gap() || value != 2 * table.genus() - 1)
        fail(ErrorCode::InternalInconsistency, "closed-form max gap disagrees");
    return value;
}

bool is_symmetric_at(const BoseckTable& table, std::size_t place_index) {
    require_place(table, place_index);
    const Int pn = table.spec().pn();
    bool symmetric = true;
    for (std::size_t i = 0; i < table.place_count(); ++i)
        if (i != place_index && table.deltas()[i] % pn != 0) symmetric = false;
    if (table.genus() > 0) {
        const bool via_gaps =
            gap_sequence(table, place_index).max_gap() == 2 * table.genus() - 1;
        if (via_gaps != symmetric)
            fail(ErrorCode::InternalInconsistency,
                 "symmetry criterion disagrees with the max gap");
    }
    return symmetric;
}

NumericalSemigroup semigroup_from_gaps(const BoseckTable& table, std::size_t place_index,
                                       Int size_guard) {
    const GapSet gaps = gap_sequence(table, place_index);
    NumericalSemigroup h = NumericalSemigroup::from_gaps(gaps, size_guard);
    if (table.genus() > 0 && is_symmetric_at(table, place_index)) {
        // Symmetric case: pole numbers below 2g are exactly the
        // reflections 2g-1-a of the gaps a.
        const Int top = 2 * table.genus() - 1;
        for (Int a : gaps.values())
            if (!h.contains(top - a))
                fail(ErrorCode::InternalInconsistency,
                     "reflected gap " + std::to_string(top - a) + " is not a pole number");
    }
    return h;
}

}  // namespace semigap

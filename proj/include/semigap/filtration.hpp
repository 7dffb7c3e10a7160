#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semigap/errors.hpp"

namespace semigap {

/// Generator events along an increasing pole-number sequence.  Index i
/// is a jump when pole_numbers[i+1] is not a nonnegative combination of
/// the earlier nonzero pole numbers; the jump count equals the number
/// of minimal generators among the listed pole numbers.
struct FiltrationReport {
    std::vector<Int> pole_numbers;
    std::vector<std::size_t> jump_indices;
    std::vector<Int> generators;
};

/// pole_numbers must be strictly increasing and start at 0.
FiltrationReport jumps(std::span<const Int> pole_numbers);
FiltrationReport jumps(std::initializer_list<Int> pole_numbers);

/// A claimed kernel order must divide every pole number at or below its
/// index.
bool kernel_order_divides(Int pole_number, Int claimed_order);

/// First pole number among poles[1..index] the claimed order fails to
/// divide, if any.
std::optional<Int> first_kernel_violation(std::span<const Int> poles, std::size_t index,
                                          Int claimed_order);

}  // namespace semigap

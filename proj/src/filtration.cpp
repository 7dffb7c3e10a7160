#include "semigap/filtration.hpp"

#include <algorithm>
#include <string>

namespace semigap {

FiltrationReport jumps(std::span<const Int> pole_numbers) {
    if (pole_numbers.empty() || pole_numbers.front() != 0)
        fail(ErrorCode::NotIncreasing, "pole numbers must start at 0");
    for (std::size_t i = 1; i < pole_numbers.size(); ++i)
        if (pole_numbers[i] <= pole_numbers[i - 1])
            fail(ErrorCode::NotIncreasing, "pole numbers must be strictly increasing");

    FiltrationReport report;
    report.pole_numbers.assign(pole_numbers.begin(), pole_numbers.end());

    const Int top = pole_numbers.back();
    std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
    reach[0] = true;
    for (std::size_t i = 0; i + 1 < pole_numbers.size(); ++i) {
        const Int next = pole_numbers[i + 1];
        if (reach[static_cast<std::size_t>(next)]) continue;  // combination of earlier poles
        report.jump_indices.push_back(i);
        report.generators.push_back(next);
        for (Int x = next; x <= top; ++x)
            if (reach[static_cast<std::size_t>(x - next)]) reach[static_cast<std::size_t>(x)] = true;
    }
    return report;
}

FiltrationReport jumps(std::initializer_list<Int> pole_numbers) {
    return jumps(std::span<const Int>(pole_numbers.begin(), pole_numbers.size()));
}

bool kernel_order_divides(Int pole_number, Int claimed_order) {
    if (pole_number < 1 || claimed_order < 1)
        fail(ErrorCode::InvalidSpec, "pole number and claimed order must be >= 1");
    return pole_number % claimed_order == 0;
}

std::optional<Int> first_kernel_violation(std::span<const Int> poles, std::size_t index,
                                          Int claimed_order) {
    if (index >= poles.size())
        fail(ErrorCode::PlaceOutOfRange, "index beyond the pole list");
    for (std::size_t nu = 1; nu <= index; ++nu)
        if (!kernel_order_divides(poles[nu], claimed_order)) return poles[nu];
    return std::nullopt;
}

}  // namespace semigap

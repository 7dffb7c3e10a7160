#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semigap {

/// All exact computations run on 64-bit integers.  A configurable size
/// guard keeps table-building operations (and the p-power inputs that
/// drive them) far away from the overflow range; the checked helpers
/// below catch anything that slips through arithmetic on user input.
using Int = std::int64_t;

/// Default ceiling for p^n inputs and membership-table lengths.
inline constexpr Int kDefaultSizeGuard = Int{1} << 20;

enum class ErrorCode {
    EmptyGenerators,
    InvalidGenerator,
    GcdNotOne,
    GenusZero,
    NotCoprime,
    DegenerateGenerator,
    NotMember,
    InvalidGapSet,
    NotASemigroup,
    InvalidCover,
    InvalidSpec,
    InvalidConductors,
    NoCoprimeMember,
    PlaceOutOfRange,
    MultiplePlaces,
    NotIncreasing,
    InternalInconsistency,
    Overflow,
    SizeGuardExceeded,
};

const char* name(ErrorCode code) noexcept;

/// Carrier for every rejected input or failed consistency check.  The
/// code is stable API (the CLI prints its name verbatim); the message
/// is free-form detail.
class DomainError : public std::runtime_error {
  public:
    DomainError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw DomainError(code, message);
}

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// base^exp, rejecting results above `limit` with SizeGuardExceeded.
Int checked_pow(Int base, Int exp, Int limit);

bool is_prime(Int n);

/// Smallest prime factor of n >= 2, or 0 when n < 2.
Int smallest_prime_factor(Int n);

bool is_prime_power_of(Int q, Int p);

}  // namespace semigap

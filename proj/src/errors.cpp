#include "semigap/errors.hpp"

#include <limits>

namespace semigap {

const char* name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyGenerators: return "EmptyGenerators";
        case ErrorCode::InvalidGenerator: return "InvalidGenerator";
        case ErrorCode::GcdNotOne: return "GcdNotOne";
        case ErrorCode::GenusZero: return "GenusZero";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::DegenerateGenerator: return "DegenerateGenerator";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::InvalidGapSet: return "InvalidGapSet";
        case ErrorCode::NotASemigroup: return "NotASemigroup";
        case ErrorCode::InvalidCover: return "InvalidCover";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::InvalidConductors: return "InvalidConductors";
        case ErrorCode::NoCoprimeMember: return "NoCoprimeMember";
        case ErrorCode::PlaceOutOfRange: return "PlaceOutOfRange";
        case ErrorCode::MultiplePlaces: return "MultiplePlaces";
        case ErrorCode::NotIncreasing: return "NotIncreasing";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    }
    return "UnknownError";
}

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out))
        fail(ErrorCode::Overflow, "integer overflow in addition");
    return out;
}

Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        fail(ErrorCode::Overflow, "integer overflow in multiplication");
    return out;
}

Int checked_pow(Int base, Int exp, Int limit) {
    if (base < 1 || exp < 0)
        fail(ErrorCode::InvalidSpec, "checked_pow expects base >= 1, exp >= 0");
    Int result = 1;
    for (Int e = 0; e < exp; ++e) {
        result = checked_mul(result, base);
        if (result > limit)
            fail(ErrorCode::SizeGuardExceeded,
                 "power " + std::to_string(base) + "^" + std::to_string(exp) +
                     " exceeds size guard " + std::to_string(limit));
    }
    return result;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Int smallest_prime_factor(Int n) {
    if (n < 2) return 0;
    if (n % 2 == 0) return 2;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

bool is_prime_power_of(Int q, Int p) {
    if (q < 2 || !is_prime(p)) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace semigap

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "semigap/covers.hpp"
#include "semigap/errors.hpp"

namespace testutil {

template <typename F>
std::optional<semigap::ErrorCode> error_code_of(F&& f) {
    try {
        f();
    } catch (const semigap::DomainError& e) {
        return e.code();
    }
    return std::nullopt;
}

// Randomized cyclic-cover ramification data: p in {2,3,5,7}, n in {1,2},
// 1..max_places places, lambdas in [1,30] coprime to p.
inline std::vector<semigap::CyclicCoverSpec> random_cyclic_specs(std::size_t count,
                                                                 std::uint32_t seed,
                                                                 int max_places = 3) {
    std::mt19937 rng(seed);
    const semigap::Int primes[] = {2, 3, 5, 7};
    std::vector<semigap::CyclicCoverSpec> specs;
    specs.reserve(count);
    while (specs.size() < count) {
        const semigap::Int p = primes[rng() % 4];
        const semigap::Int n = 1 + static_cast<semigap::Int>(rng() % 2);
        const int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_places));
        std::vector<semigap::RamifiedPlace> places;
        for (int i = 0; i < s; ++i) {
            std::vector<semigap::Int> lambdas;
            for (semigap::Int j = 0; j < n; ++j) {
                semigap::Int lambda;
                do {
                    lambda = 1 + static_cast<semigap::Int>(rng() % 30);
                } while (lambda % p == 0);
                lambdas.push_back(lambda);
            }
            places.push_back(semigap::RamifiedPlace{std::move(lambdas)});
        }
        specs.emplace_back(p, n, std::move(places));
    }
    return specs;
}

// One-place data realizable as a genuine cyclic tower: successive jumps
// must grow by more than a factor of p (upper ramification breaks of a
// cyclic p^n extension satisfy b_{j+1} >= p*b_j, and coprimality to p
// makes the inequality strict).  Equality of the gap complement with the
// generator semigroup holds on this class and can fail off it.
inline std::vector<semigap::CyclicCoverSpec> random_tower_specs(std::size_t count,
                                                                std::uint32_t seed) {
    std::mt19937 rng(seed);
    const semigap::Int primes[] = {2, 3, 5, 7};
    std::vector<semigap::CyclicCoverSpec> specs;
    specs.reserve(count);
    while (specs.size() < count) {
        const semigap::Int p = primes[rng() % 4];
        const semigap::Int n = 1 + static_cast<semigap::Int>(rng() % 2);
        std::vector<semigap::Int> lambdas;
        semigap::Int prev = 0;
        for (semigap::Int j = 0; j < n; ++j) {
            semigap::Int lambda;
            do {
                lambda = p * prev + 1 + static_cast<semigap::Int>(rng() % 30);
            } while (lambda % p == 0);
            lambdas.push_back(lambda);
            prev = lambda;
        }
        specs.emplace_back(p, n,
                           std::vector<semigap::RamifiedPlace>{
                               semigap::RamifiedPlace{std::move(lambdas)}});
    }
    return specs;
}

}  // namespace testutil

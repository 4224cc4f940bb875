/*
 * Copyright 2026 the hybe authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "hybe/types.hpp"

namespace hybe::pow {

/// Difficulties above this throw unless the caller raises the guard.
/// 2^32 hash evaluations is already minutes of work on one core.
inline constexpr std::uint32_t kDefaultGuardBits = 32;

struct Proof {
    std::uint64_t nonce = 0;
    Hash256 digest{};
};

struct MiningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint32_t leading_zero_bits(const Hash256& digest);

inline bool digest_meets(const Hash256& digest, std::uint32_t bits) {
    return leading_zero_bits(digest) >= bits;
}

/// Finds the smallest nonce >= start_nonce whose digest over
/// preimage || nonce carries at least `bits` leading zero bits.
///
/// The search scans fixed-size nonce chunks with an OpenMP min-reduction, so
/// the result is identical to the serial reference for any thread count.
/// Throws MiningError if `bits` exceeds the guard or the nonce space wraps.
Proof mine(std::span<const std::uint8_t> preimage, std::uint32_t bits,
           std::uint64_t start_nonce = 0, std::uint32_t guard_bits = kDefaultGuardBits);

/// Serial reference for mine(); same contract, plain nonce++ loop.
Proof mine_serial(std::span<const std::uint8_t> preimage, std::uint32_t bits,
                  std::uint64_t start_nonce = 0, std::uint32_t guard_bits = kDefaultGuardBits);

/// True iff the recomputed digest matches proof.digest and satisfies `bits`.
/// Costs exactly one hash evaluation regardless of difficulty.
bool verify(std::span<const std::uint8_t> preimage, const Proof& proof, std::uint32_t bits);

}  // namespace hybe::pow

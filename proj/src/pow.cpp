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
#include "hybe/pow.hpp"

#include <bit>
#include <limits>

#include "hybe/sha256.hpp"

namespace hybe::pow {

namespace {

// Nonces scanned per parallel sweep. Small enough that the tail overshoot
// past the winning nonce stays cheap at low difficulties.
constexpr std::uint64_t kChunk = 2048;

void check_guard(std::uint32_t bits, std::uint32_t guard_bits) {
    if (bits > 256) throw MiningError("pow: difficulty above digest width");
    if (bits > guard_bits) throw MiningError("pow: difficulty above mining guard");
}

}  // namespace

std::uint32_t leading_zero_bits(const Hash256& digest) {
    std::uint32_t bits = 0;
    for (std::uint8_t byte : digest) {
        if (byte == 0) {
            bits += 8;
            continue;
        }
        bits += static_cast<std::uint32_t>(std::countl_zero(byte));
        break;
    }
    return bits;
}

Proof mine_serial(std::span<const std::uint8_t> preimage, std::uint32_t bits,
                  std::uint64_t start_nonce, std::uint32_t guard_bits) {
    check_guard(bits, guard_bits);
    std::uint64_t nonce = start_nonce;
    for (;;) {
        Hash256 digest = sha256_with_suffix64(preimage, nonce);
        if (digest_meets(digest, bits)) return Proof{nonce, digest};
        if (nonce == std::numeric_limits<std::uint64_t>::max()) {
            throw MiningError("pow: nonce space exhausted");
        }
        ++nonce;
    }
}

Proof mine(std::span<const std::uint8_t> preimage, std::uint32_t bits,
           std::uint64_t start_nonce, std::uint32_t guard_bits) {
    check_guard(bits, guard_bits);
    const std::uint64_t kNoWinner = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t base = start_nonce;
    for (;;) {
        const std::uint64_t span = std::min<std::uint64_t>(kChunk, kNoWinner - base);
        std::uint64_t winner = kNoWinner;
#pragma omp parallel for schedule(static) reduction(min : winner)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(span); ++i) {
            const std::uint64_t nonce = base + static_cast<std::uint64_t>(i);
            Hash256 digest = sha256_with_suffix64(preimage, nonce);
            if (digest_meets(digest, bits) && nonce < winner) winner = nonce;
        }
        if (winner != kNoWinner) {
            return Proof{winner, sha256_with_suffix64(preimage, winner)};
        }
        if (span < kChunk) {
            // Reached the top of the nonce space; check the final nonce.
            Hash256 digest = sha256_with_suffix64(preimage, kNoWinner);
            if (digest_meets(digest, bits)) return Proof{kNoWinner, digest};
            throw MiningError("pow: nonce space exhausted");
        }
        base += span;
    }
}

bool verify(std::span<const std::uint8_t> preimage, const Proof& proof, std::uint32_t bits) {
    Hash256 digest = sha256_with_suffix64(preimage, proof.nonce);
    return digest == proof.digest && digest_meets(digest, bits);
}

}  // namespace hybe::pow

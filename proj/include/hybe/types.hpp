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

#include <array>
#include <cstdint>
#include <vector>

namespace hybe {

/// Compute-node identifier. The storage actor is not a compute node and is
/// addressed separately.
using NodeId = std::uint32_t;

/// Simulated time in microseconds since the start of the run.
using SimTime = std::uint64_t;

/// SHA-256 digest.
using Hash256 = std::array<std::uint8_t, 32>;

/// A value transfer between two compute nodes.
///
/// `receive_time` is replica-local: each replica stamps it when the enclosing
/// block arrives, and it is excluded from canonical hashing.
struct Transaction {
    std::uint64_t txn_id = 0;
    NodeId sender = 0;
    NodeId receiver = 0;
    SimTime creation_time = 0;
    SimTime receive_time = 0;
    std::uint64_t amount = 0;

    bool operator==(const Transaction&) const = default;
};

/// A hash-linked container of transactions.
///
/// `block_id` is the chain height the block was mined for; `difficulty_bits`
/// is the number of leading zero bits the block hash must carry; `nonce` is
/// the proof-of-work witness. `receive_time` is replica-local and excluded
/// from hashing, as with transactions.
struct Block {
    std::uint64_t block_id = 0;
    Hash256 parent_hash{};
    SimTime creation_time = 0;
    SimTime receive_time = 0;
    std::uint32_t txn_count = 0;
    std::vector<Transaction> txns;
    std::uint32_t difficulty_bits = 0;
    std::uint64_t nonce = 0;

    bool operator==(const Block&) const = default;
};

/// The well-known first block of every chain: height 0, zero parent hash,
/// no transactions, difficulty 0, nonce 0.
Block make_genesis();

/// Hash functor so Hash256 can key unordered containers.
struct Hash256Hasher {
    std::size_t operator()(const Hash256& h) const noexcept {
        std::size_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | h[i];
        return v;
    }
};

}  // namespace hybe

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
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hybe/types.hpp"

namespace hybe {

enum class AppendResult {
    Ok,
    DuplicateId,  // block_id at or below the current tip
    WrongParent,  // parent hash does not match the tip hash
    InvalidPow,   // hash does not carry the block's declared difficulty
};

const char* to_string(AppendResult r);

/// An append-only chain replica. Owned by exactly one actor; never shared.
class Ledger {
  public:
    /// Empty chain. Most call sites want with_genesis().
    Ledger() = default;

    static Ledger with_genesis();

    /// Appends `block` iff it extends the tip: block_id == tip_id + 1,
    /// parent_hash == tip hash, and its own proof-of-work holds.
    /// On rejection the chain is unchanged.
    AppendResult append(Block block);

    const Block& tip() const { return blocks_.back(); }
    const Hash256& tip_hash() const { return hashes_.back(); }
    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<Hash256>& hashes() const { return hashes_; }
    bool contains(const Hash256& h) const { return index_.count(h) != 0; }

    /// Full-chain check: every adjacent pair hash-linked, every block's
    /// proof-of-work valid at its own difficulty. Hashes are recomputed from
    /// scratch (cached values are not trusted). OpenMP-parallel over blocks.
    bool verify() const;

    /// Serial reference for verify(); same contract.
    bool verify_serial() const;

    /// Wholesale replacement, used when a replica is repaired from storage.
    void replace(const Ledger& other);

    /// Newline-delimited export, one block record per line.
    std::string export_records() const;

    bool same_chain(const Ledger& other) const { return hashes_ == other.hashes_; }

  private:
    std::vector<Block> blocks_;
    std::vector<Hash256> hashes_;
    std::unordered_set<Hash256, Hash256Hasher> index_;
};

}  // namespace hybe

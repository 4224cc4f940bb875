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
#include <string>
#include <string_view>
#include <vector>

#include "hybe/types.hpp"

namespace hybe {

// Canonical byte layouts. These are normative and bit-exact: every replica
// must hash identical bytes for identical logical content, so all integers
// are fixed-width big-endian and the replica-local receive_time fields are
// excluded.

/// Hashed transaction layout, 32 bytes:
/// txn_id(8) | sender(4) | receiver(4) | creation_time(8) | amount(8).
std::array<std::uint8_t, 32> canonical_txn_bytes(const Transaction& txn);

/// Hashed block layout, 56 + 32 * txn_count bytes:
/// block_id(8) | parent_hash(32) | creation_time(8) | txn_count(4)
/// | txns(32 each) | difficulty_bits(4).
/// The nonce is not part of this layout; it is appended at hash time.
/// Throws std::invalid_argument if txn_count disagrees with txns.size().
std::vector<std::uint8_t> canonical_block_bytes(const Block& block);

/// SHA-256 over canonical_block_bytes(block) followed by the nonce as
/// 8 big-endian bytes.
Hash256 block_hash(const Block& block);

std::string to_hex(const Hash256& h);
Hash256 hash_from_hex(std::string_view hex);

// Ledger export records: one block per line, whitespace-separated fields in
// block-structure order (block_id, parent_hash, creation_time, receive_time,
// txn_count, each transaction's six fields, difficulty_bits, nonce). Hashes
// are hex-encoded. Unlike the canonical layout these include the
// replica-local receive times, so records round-trip every field.

std::string block_to_record(const Block& block);
Block block_from_record(std::string_view line);  // throws std::invalid_argument

}  // namespace hybe

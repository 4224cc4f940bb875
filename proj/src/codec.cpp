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
#include "hybe/codec.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hybe/sha256.hpp"

namespace hybe {

namespace {

void put_u32(std::uint8_t* out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out[i] = static_cast<std::uint8_t>(v >> (24 - 8 * i));
}

void put_u64(std::uint8_t* out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
}

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("hash_from_hex: bad hex digit");
}

}  // namespace

Block make_genesis() { return Block{}; }

std::array<std::uint8_t, 32> canonical_txn_bytes(const Transaction& txn) {
    std::array<std::uint8_t, 32> out{};
    put_u64(out.data(), txn.txn_id);
    put_u32(out.data() + 8, txn.sender);
    put_u32(out.data() + 12, txn.receiver);
    put_u64(out.data() + 16, txn.creation_time);
    put_u64(out.data() + 24, txn.amount);
    return out;
}

std::vector<std::uint8_t> canonical_block_bytes(const Block& block) {
    if (block.txn_count != block.txns.size()) {
        throw std::invalid_argument("canonical_block_bytes: txn_count does not match txn list");
    }
    std::vector<std::uint8_t> out(56 + 32 * block.txns.size());
    std::uint8_t* p = out.data();
    put_u64(p, block.block_id);
    std::copy(block.parent_hash.begin(), block.parent_hash.end(), p + 8);
    put_u64(p + 40, block.creation_time);
    put_u32(p + 48, block.txn_count);
    p += 52;
    for (const Transaction& txn : block.txns) {
        auto bytes = canonical_txn_bytes(txn);
        std::copy(bytes.begin(), bytes.end(), p);
        p += 32;
    }
    put_u32(p, block.difficulty_bits);
    return out;
}

Hash256 block_hash(const Block& block) {
    return sha256_with_suffix64(canonical_block_bytes(block), block.nonce);
}

std::string to_hex(const Hash256& h) {
    std::string out(64, '0');
    for (std::size_t i = 0; i < h.size(); ++i) {
        out[2 * i] = kHexDigits[h[i] >> 4];
        out[2 * i + 1] = kHexDigits[h[i] & 0xf];
    }
    return out;
}

Hash256 hash_from_hex(std::string_view hex) {
    if (hex.size() != 64) throw std::invalid_argument("hash_from_hex: expected 64 hex chars");
    Hash256 out{};
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((hex_nibble(hex[2 * i]) << 4) | hex_nibble(hex[2 * i + 1]));
    }
    return out;
}

std::string block_to_record(const Block& block) {
    if (block.txn_count != block.txns.size()) {
        throw std::invalid_argument("block_to_record: txn_count does not match txn list");
    }
    std::ostringstream os;
    os << block.block_id << ' ' << to_hex(block.parent_hash) << ' ' << block.creation_time << ' '
       << block.receive_time << ' ' << block.txn_count;
    for (const Transaction& t : block.txns) {
        os << ' ' << t.txn_id << ' ' << t.sender << ' ' << t.receiver << ' ' << t.creation_time
           << ' ' << t.receive_time << ' ' << t.amount;
    }
    os << ' ' << block.difficulty_bits << ' ' << block.nonce;
    return os.str();
}

namespace {

class TokenReader {
  public:
    explicit TokenReader(std::string_view line) : line_(line) {}

    std::string_view next() {
        while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
        if (pos_ >= line_.size()) throw std::invalid_argument("block_from_record: truncated record");
        std::size_t start = pos_;
        while (pos_ < line_.size() && line_[pos_] != ' ') ++pos_;
        return line_.substr(start, pos_ - start);
    }

    bool done() {
        while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
        return pos_ >= line_.size();
    }

    template <typename T>
    T next_int() {
        std::string_view tok = next();
        T v{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("block_from_record: bad integer field");
        }
        return v;
    }

  private:
    std::string_view line_;
    std::size_t pos_ = 0;
};

}  // namespace

Block block_from_record(std::string_view line) {
    TokenReader r(line);
    Block b;
    b.block_id = r.next_int<std::uint64_t>();
    b.parent_hash = hash_from_hex(r.next());
    b.creation_time = r.next_int<std::uint64_t>();
    b.receive_time = r.next_int<std::uint64_t>();
    b.txn_count = r.next_int<std::uint32_t>();
    b.txns.reserve(b.txn_count);
    for (std::uint32_t i = 0; i < b.txn_count; ++i) {
        Transaction t;
        t.txn_id = r.next_int<std::uint64_t>();
        t.sender = r.next_int<NodeId>();
        t.receiver = r.next_int<NodeId>();
        t.creation_time = r.next_int<std::uint64_t>();
        t.receive_time = r.next_int<std::uint64_t>();
        t.amount = r.next_int<std::uint64_t>();
        b.txns.push_back(t);
    }
    b.difficulty_bits = r.next_int<std::uint32_t>();
    b.nonce = r.next_int<std::uint64_t>();
    if (!r.done()) throw std::invalid_argument("block_from_record: trailing fields");
    return b;
}

}  // namespace hybe

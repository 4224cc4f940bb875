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
#include "hybe/ledger.hpp"

#include <sstream>

#include "hybe/codec.hpp"
#include "hybe/pow.hpp"

namespace hybe {

const char* to_string(AppendResult r) {
    switch (r) {
        case AppendResult::Ok: return "ok";
        case AppendResult::DuplicateId: return "duplicate-id";
        case AppendResult::WrongParent: return "wrong-parent";
        case AppendResult::InvalidPow: return "invalid-pow";
    }
    return "unknown";
}

Ledger Ledger::with_genesis() {
    Ledger l;
    Block g = make_genesis();
    Hash256 h = block_hash(g);
    l.blocks_.push_back(std::move(g));
    l.hashes_.push_back(h);
    l.index_.insert(h);
    return l;
}

AppendResult Ledger::append(Block block) {
    if (!blocks_.empty()) {
        if (block.block_id <= tip().block_id) return AppendResult::DuplicateId;
        if (block.block_id != tip().block_id + 1 || block.parent_hash != tip_hash()) {
            return AppendResult::WrongParent;
        }
    }
    Hash256 h = block_hash(block);
    if (!pow::digest_meets(h, block.difficulty_bits)) return AppendResult::InvalidPow;
    blocks_.push_back(std::move(block));
    hashes_.push_back(h);
    index_.insert(h);
    return AppendResult::Ok;
}

bool Ledger::verify() const {
    const std::size_t n = blocks_.size();
    if (n == 0) return true;
    std::vector<Hash256> fresh(n);
    bool pow_ok = true;
#pragma omp parallel for schedule(static) reduction(&& : pow_ok)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        fresh[i] = block_hash(blocks_[i]);
        pow_ok = pow_ok && pow::digest_meets(fresh[i], blocks_[i].difficulty_bits) &&
                 blocks_[i].txn_count == blocks_[i].txns.size();
    }
    if (!pow_ok) return false;
    for (std::size_t i = 1; i < n; ++i) {
        if (blocks_[i].parent_hash != fresh[i - 1]) return false;
        if (blocks_[i].block_id <= blocks_[i - 1].block_id) return false;
    }
    return true;
}

bool Ledger::verify_serial() const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].txn_count != blocks_[i].txns.size()) return false;
        Hash256 h = block_hash(blocks_[i]);
        if (!pow::digest_meets(h, blocks_[i].difficulty_bits)) return false;
        if (i + 1 < blocks_.size()) {
            if (blocks_[i + 1].parent_hash != h) return false;
            if (blocks_[i + 1].block_id <= blocks_[i].block_id) return false;
        }
    }
    return true;
}

void Ledger::replace(const Ledger& other) {
    blocks_ = other.blocks_;
    hashes_ = other.hashes_;
    index_ = other.index_;
}

std::string Ledger::export_records() const {
    std::ostringstream os;
    for (const Block& b : blocks_) os << block_to_record(b) << '\n';
    return os.str();
}

}  // namespace hybe

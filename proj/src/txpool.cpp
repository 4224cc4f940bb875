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
#include "hybe/txpool.hpp"

#include <stdexcept>

namespace hybe {

TxnQueue::TxnQueue(std::uint32_t threshold) : threshold_(threshold) {
    if (threshold == 0) throw std::invalid_argument("TxnQueue: threshold must be positive");
}

Block TxnQueue::encapsulate(std::size_t count, const TipRef& tip, SimTime now,
                            std::uint32_t difficulty_bits) {
    Block b;
    b.block_id = tip.next_id;
    b.parent_hash = tip.hash;
    b.creation_time = now;
    b.difficulty_bits = difficulty_bits;
    b.txns.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        b.txns.push_back(queue_.front());
        queue_.pop_front();
    }
    b.txn_count = static_cast<std::uint32_t>(b.txns.size());
    return b;
}

std::optional<Block> TxnQueue::submit(const Transaction& txn, const TipRef& tip, SimTime now,
                                      std::uint32_t difficulty_bits) {
    queue_.push_back(txn);
    if (queue_.size() < threshold_) return std::nullopt;
    return encapsulate(threshold_, tip, now, difficulty_bits);
}

std::optional<Block> TxnQueue::flush(const TipRef& tip, SimTime now,
                                     std::uint32_t difficulty_bits) {
    if (queue_.empty()) return std::nullopt;
    return encapsulate(queue_.size(), tip, now, difficulty_bits);
}

BlockQueues::BlockQueues(SimTime pop_interval) : pop_interval_(pop_interval) {}

std::optional<Block> BlockQueues::pop_outgoing(SimTime now) {
    if (outgoing_.empty()) return std::nullopt;
    if (popped_before_ && now - last_pop_ < pop_interval_) return std::nullopt;
    Block b = std::move(outgoing_.front());
    outgoing_.pop_front();
    popped_before_ = true;
    last_pop_ = now;
    return b;
}

std::optional<Block> BlockQueues::next_incoming(bool validation_in_flight) {
    if (validation_in_flight) {
        throw std::logic_error("BlockQueues: next_incoming while a validation is in flight");
    }
    if (incoming_.empty()) return std::nullopt;
    Block b = std::move(incoming_.front());
    incoming_.pop_front();
    return b;
}

}  // namespace hybe

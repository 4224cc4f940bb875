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

#include <deque>
#include <optional>

#include "hybe/types.hpp"

namespace hybe {

/// Chain position a new block should extend.
struct TipRef {
    Hash256 hash{};
    std::uint64_t next_id = 1;
};

/// Per-node FIFO of pending transactions. Reaching the encapsulation
/// threshold drains exactly `threshold` transactions, in submission order,
/// into a new unmined block.
class TxnQueue {
  public:
    explicit TxnQueue(std::uint32_t threshold);

    /// Appends `txn`; returns a block when the queue reaches the threshold.
    std::optional<Block> submit(const Transaction& txn, const TipRef& tip, SimTime now,
                                std::uint32_t difficulty_bits);

    /// Encapsulates whatever is queued (possibly fewer than `threshold`
    /// transactions) so nothing is stranded when the workload ends.
    std::optional<Block> flush(const TipRef& tip, SimTime now, std::uint32_t difficulty_bits);

    std::size_t size() const { return queue_.size(); }
    std::uint32_t threshold() const { return threshold_; }

  private:
    Block encapsulate(std::size_t count, const TipRef& tip, SimTime now,
                      std::uint32_t difficulty_bits);

    std::deque<Transaction> queue_;
    std::uint32_t threshold_;
};

/// Outgoing and incoming block FIFOs for one node. Outgoing pops are gated
/// by a fixed interval so queue latency is masked; incoming pops happen one
/// at a time, only between validations.
class BlockQueues {
  public:
    explicit BlockQueues(SimTime pop_interval);

    void push_outgoing(Block b) { outgoing_.push_back(std::move(b)); }
    void push_incoming(Block b) { incoming_.push_back(std::move(b)); }

    /// Head of the outgoing FIFO if `pop_interval` has elapsed since the
    /// last successful pop, else nothing.
    std::optional<Block> pop_outgoing(SimTime now);

    /// Head of the incoming FIFO. Throws std::logic_error when called while
    /// the caller still has a validation in flight.
    std::optional<Block> next_incoming(bool validation_in_flight);

    std::size_t outgoing_size() const { return outgoing_.size(); }
    std::size_t incoming_size() const { return incoming_.size(); }

  private:
    std::deque<Block> outgoing_;
    std::deque<Block> incoming_;
    SimTime pop_interval_;
    bool popped_before_ = false;
    SimTime last_pop_ = 0;
};

}  // namespace hybe

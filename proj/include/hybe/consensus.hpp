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

#include <compare>
#include <deque>
#include <functional>
#include <optional>
#include <set>

#include "hybe/types.hpp"

namespace hybe {

/// Stable identity of a proposal across re-mines and retries: the creating
/// node plus its per-creator sequence number. Block ids and hashes change
/// when a deferred block is re-linked to a new tip; this does not.
struct ProposalId {
    NodeId creator = 0;
    std::uint64_t seq = 0;

    auto operator<=>(const ProposalId&) const = default;
};

struct Vote {
    NodeId voter = 0;
    Hash256 block_hash{};
    bool valid = false;
};

/// One round's vote bookkeeping. `agreed` is the set of nodes that voted
/// valid; `responders` is everyone whose vote arrived at all.
class VoteTally {
  public:
    explicit VoteTally(std::uint32_t cluster_size) : cluster_size_(cluster_size) {}

    /// Records a vote; repeat votes from the same node are ignored.
    void add(const Vote& v);

    /// Strict majority of the configured cluster size: |agreed| > N/2.
    bool majority() const { return 2ull * agreed_.size() > cluster_size_; }

    const std::set<NodeId>& agreed() const { return agreed_; }
    const std::set<NodeId>& responders() const { return responders_; }
    std::uint32_t cluster_size() const { return cluster_size_; }
    bool storage_agreed() const { return storage_agreed_; }
    void set_storage_agreed() { storage_agreed_ = true; }

  private:
    std::uint32_t cluster_size_;
    std::set<NodeId> agreed_;
    std::set<NodeId> responders_;
    bool storage_agreed_ = false;
};

enum class Outcome {
    Committed,         // majority of compute nodes voted valid
    StorageCommitted,  // storage fallback validated the block
    Deferred,          // pushed to the waiting queue for retry
};

const char* to_string(Outcome o);

/// The commit/fallback decision. Majority commits without consulting
/// storage; otherwise `storage_validates` is invoked exactly once and its
/// verdict picks between StorageCommitted and Deferred.
Outcome decide(VoteTally& tally, const std::function<bool()>& storage_validates);

struct WaitingEntry {
    ProposalId pid;
    Block block;
    std::uint32_t retries = 0;
};

/// Retry buffer for blocks that failed both majority and storage
/// validation in a round.
class WaitingQueue {
  public:
    explicit WaitingQueue(std::uint32_t max_retries) : max_retries_(max_retries) {}

    void push(ProposalId pid, Block block, std::uint32_t retries);
    std::optional<WaitingEntry> pop();
    /// Drops the entry for `pid`, e.g. once the block committed elsewhere.
    void purge(const ProposalId& pid);
    bool contains(const ProposalId& pid) const;
    bool exhausted(const WaitingEntry& e) const { return e.retries > max_retries_; }

    std::size_t size() const { return entries_.size(); }
    std::uint32_t max_retries() const { return max_retries_; }

  private:
    std::deque<WaitingEntry> entries_;
    std::uint32_t max_retries_;
};

}  // namespace hybe

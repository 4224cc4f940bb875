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

#include "hybe/types.hpp"

namespace hybe {

/// SHA-256 of `data`.
Hash256 sha256(std::span<const std::uint8_t> data);

/// SHA-256 of `prefix` followed by `suffix` encoded as 8 big-endian bytes.
/// This is the mining hot path; it reuses a thread-local digest context.
Hash256 sha256_with_suffix64(std::span<const std::uint8_t> prefix, std::uint64_t suffix);

/// Process-wide count of digest evaluations. Tests use this to check that
/// verification costs exactly one hash.
std::uint64_t sha256_invocations();

}  // namespace hybe

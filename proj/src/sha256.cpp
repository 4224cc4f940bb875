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
#include "hybe/sha256.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <memory>
#include <stdexcept>

namespace hybe {

namespace {

std::atomic<std::uint64_t> g_invocations{0};

struct CtxDeleter {
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

EVP_MD_CTX* local_ctx() {
    thread_local std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx{EVP_MD_CTX_new()};
    return ctx.get();
}

}  // namespace

Hash256 sha256(std::span<const std::uint8_t> data) {
    g_invocations.fetch_add(1, std::memory_order_relaxed);
    Hash256 out{};
    unsigned int n = 0;
    EVP_MD_CTX* ctx = local_ctx();
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, out.data(), &n) != 1 || n != out.size()) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    return out;
}

Hash256 sha256_with_suffix64(std::span<const std::uint8_t> prefix, std::uint64_t suffix) {
    g_invocations.fetch_add(1, std::memory_order_relaxed);
    std::uint8_t tail[8];
    for (int i = 0; i < 8; ++i) tail[i] = static_cast<std::uint8_t>(suffix >> (56 - 8 * i));
    Hash256 out{};
    unsigned int n = 0;
    EVP_MD_CTX* ctx = local_ctx();
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, prefix.data(), prefix.size()) != 1 ||
        EVP_DigestUpdate(ctx, tail, sizeof tail) != 1 ||
        EVP_DigestFinal_ex(ctx, out.data(), &n) != 1 || n != out.size()) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    return out;
}

std::uint64_t sha256_invocations() { return g_invocations.load(std::memory_order_relaxed); }

}  // namespace hybe

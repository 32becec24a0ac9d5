// Copyright 2026 The qem authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "qem/kernels.hpp"

namespace qem {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
#else
    return false;
#endif
}

namespace {

struct Selection {
    const KernelTable *table;
    const char *name;
};

Selection select() {
    const char *env = std::getenv("QEM_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0)
        return {&scalar_kernels(), "scalar"};
    if (avx2_available())
        return {&avx2_kernels(), "avx2"};
    // An explicit avx2 request on an unsupported CPU falls back to scalar.
    return {&scalar_kernels(), "scalar"};
}

const Selection &selection() {
    static const Selection s = select();
    return s;
}

} // namespace

const KernelTable &kernels() { return *selection().table; }

const char *kernel_backend() { return selection().name; }

} // namespace qem

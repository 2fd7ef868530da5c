#include <cstdlib>
#include <string_view>

#include "kernels/kernels_internal.hpp"

namespace symtangle {

namespace {

bool cpu_supports_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &select_kernels() {
    const KernelTable *avx2 = avx2_kernels();
    const char *env = std::getenv("SYMTANGLE_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") {
        return detail::kScalarTable;
    }
    return avx2 != nullptr ? *avx2 : detail::kScalarTable;
}

}  // namespace

const KernelTable &scalar_kernels() { return detail::kScalarTable; }

const KernelTable *avx2_kernels() {
    static const bool supported = cpu_supports_avx2();
    return supported ? detail::avx2_table() : nullptr;
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&detail::kScalarTable};
    if (const KernelTable *avx2 = avx2_kernels()) {
        out.push_back(avx2);
    }
    return out;
}

const KernelTable &active_kernels() {
    static const KernelTable &table = select_kernels();
    return table;
}

}  // namespace symtangle

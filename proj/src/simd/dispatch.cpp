#include "coxtile/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace coxtile::simd {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return avx2_compiled() && __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Level active_level() {
    static const Level level = [] {
        const char* env = std::getenv("COXTILE_SIMD");
        if (env && std::string_view(env) == "scalar") return Level::scalar;
        return avx2_supported() ? Level::avx2 : Level::scalar;
    }();
    return level;
}

const KernelTable& kernels(Level level) { return level == Level::avx2 ? avx2_kernels() : scalar_kernels(); }

const KernelTable& active_kernels() { return kernels(active_level()); }

}  // namespace coxtile::simd

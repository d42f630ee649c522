#include "kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace wordmap::kern {
namespace {

const Backend* pick_initial() {
    const char* env = std::getenv("WORDMAP_KERNELS");
#if defined(WORDMAP_HAVE_AVX2_BUILD)
    bool have_avx2 = __builtin_cpu_supports("avx2");
    if (env) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_backend();
        if (std::strcmp(env, "avx2") == 0 && have_avx2) return &avx2_backend();
    }
    if (have_avx2) return &avx2_backend();
#else
    (void)env;
#endif
    return &scalar_backend();
}

const Backend*& active() {
    static const Backend* b = pick_initial();
    return b;
}

}  // namespace

const Backend& backend() { return *active(); }

bool set_backend(const char* name) {
    if (std::strcmp(name, "scalar") == 0) {
        active() = &scalar_backend();
        return true;
    }
#if defined(WORDMAP_HAVE_AVX2_BUILD)
    if (std::strcmp(name, "avx2") == 0 && __builtin_cpu_supports("avx2")) {
        active() = &avx2_backend();
        return true;
    }
#endif
    return false;
}

}  // namespace wordmap::kern

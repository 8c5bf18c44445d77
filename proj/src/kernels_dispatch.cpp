#include <cstdlib>
#include <string_view>

#include "sketchreg/kernels.hpp"

namespace sketchreg::kernels {

namespace {

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Ops& table_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2:
            return detail::avx2_ops;
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            return detail::neon_ops;
#endif
        default:
            return detail::scalar_ops;
    }
}

Backend pick_default() {
    if (const char* env = std::getenv("SKETCHREG_KERNELS")) {
        const std::string_view want(env);
        Backend req = Backend::Scalar;
        if (want == "avx2") req = Backend::Avx2;
        else if (want == "neon") req = Backend::Neon;
        if (backend_supported(req)) return req;
        // unsupported request falls through to auto-detection
    }
    if (backend_supported(Backend::Avx2)) return Backend::Avx2;
    if (backend_supported(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

struct State {
    Backend backend = pick_default();
    const Ops* table = &table_for(backend);
};

State& state() {
    static State s;
    return s;
}

}  // namespace

const Ops& ops() { return *state().table; }

Backend active_backend() { return state().backend; }

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

bool set_backend(Backend b) {
    if (!backend_supported(b)) return false;
    state().backend = b;
    state().table = &table_for(b);
    return true;
}

}  // namespace sketchreg::kernels

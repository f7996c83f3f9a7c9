#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace llwy {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Scalar arithmetic in F_p for a word-sized prime p (p <= 64 in this project,
// but the routines are valid for any p < 256).

inline uint16_t fp_norm(uint16_t p, int64_t v) {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint16_t>(r);
}

inline uint16_t fp_add(uint16_t p, uint16_t a, uint16_t b) {
    uint32_t s = uint32_t(a) + b;
    return static_cast<uint16_t>(s >= p ? s - p : s);
}

inline uint16_t fp_sub(uint16_t p, uint16_t a, uint16_t b) {
    return static_cast<uint16_t>(a >= b ? a - b : a + p - b);
}

inline uint16_t fp_neg(uint16_t p, uint16_t a) { return a ? static_cast<uint16_t>(p - a) : 0; }

inline uint16_t fp_mul(uint16_t p, uint16_t a, uint16_t b) {
    return static_cast<uint16_t>((uint32_t(a) * b) % p);
}

inline uint16_t fp_pow(uint16_t p, uint16_t a, uint64_t e) {
    uint16_t r = 1 % p;
    uint16_t base = a;
    while (e) {
        if (e & 1) r = fp_mul(p, r, base);
        base = fp_mul(p, base, base);
        e >>= 1;
    }
    return r;
}

inline uint16_t fp_inv(uint16_t p, uint16_t a) {
    if (a == 0) throw Error("fp_inv: division by zero mod " + std::to_string(p));
    // extended Euclid
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint16_t>(t);
}

inline bool fp_is_prime(uint16_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense vector over F_p, entries normalized to [0,p).
using FpVec = std::vector<uint16_t>;

inline bool fpv_is_zero(const FpVec& v) {
    for (uint16_t x : v) if (x) return false;
    return true;
}

inline void fpv_axpy(uint16_t p, FpVec& dst, const FpVec& src, uint16_t c) {
    for (size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<uint16_t>((dst[i] + uint32_t(src[i]) * c) % p);
}

inline void fpv_scale(uint16_t p, FpVec& v, uint16_t c) {
    for (auto& x : v) x = fp_mul(p, x, c);
}

inline FpVec fpv_sub(uint16_t p, const FpVec& a, const FpVec& b) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(p, a[i], b[i]);
    return r;
}

}  // namespace llwy

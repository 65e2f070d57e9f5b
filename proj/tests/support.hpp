#pragma once

// Test-only helpers: arbitrary-precision reference values and generators.

#include "dlg2k/kbit.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <random>

namespace dlg2k::test {

using boost::multiprecision::cpp_int;

inline cpp_int big(const Residue& r) {
    cpp_int v;
    const auto limbs = r.limbs();
    for (std::size_t i = limbs.size(); i-- > 0;) {
        v <<= limb_bits;
        v |= limbs[i];
    }
    return v;
}

inline Residue residue(Width w, cpp_int v) {
    const cpp_int modulus = cpp_int(1) << w.bits();
    v %= modulus;
    if (v < 0) v += modulus;
    std::vector<limb_t> limbs(w.limbs());
    for (auto& l : limbs) {
        l = static_cast<limb_t>(v & std::numeric_limits<limb_t>::max());
        v >>= limb_bits;
    }
    return Residue::from_limbs(w, limbs);
}

inline Residue r(unsigned k, std::uint64_t v) { return Residue::from_u64(Width(k), v); }

inline Residue random_residue(Width w, std::mt19937_64& rng) {
    std::vector<limb_t> limbs(w.limbs());
    for (auto& l : limbs) l = rng();
    if (w.bits() % limb_bits) limbs.back() &= (limb_t{1} << (w.bits() % limb_bits)) - 1;
    return Residue::from_limbs(w, limbs);
}

inline Residue random_odd(Width w, std::mt19937_64& rng) {
    Residue x = random_residue(w, rng);
    x.set_bit(0);
    return x;
}

// Random h with h = 3 or 5 (mod 8).
inline Residue random_base(Width w, std::mt19937_64& rng) {
    Residue h = random_residue(w, rng);
    h = shift_left(shift_right(h, 3), 3);
    return add(h, Residue::from_u64(w, (rng() & 1) ? 3 : 5));
}

inline unsigned random_width(std::mt19937_64& rng, unsigned lo = Width::min_bits, unsigned hi = 300) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

} // namespace dlg2k::test

#pragma once

/*
 * Fixed-width arithmetic modulo 2^k, 3 <= k <= 4096.
 *
 * A Residue is a little-endian vector of 64-bit limbs. The bits of the top
 * limb above position k are kept at zero by every operation, so two residues
 * of the same width compare equal exactly when their limb vectors do, and
 * reduction modulo 2^j for j <= k is plain masking.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dlg2k {

using limb_t = std::uint64_t;
inline constexpr unsigned limb_bits = 64;

class Width {
public:
    static constexpr unsigned min_bits = 3;
    static constexpr unsigned max_bits = 4096;

    // Throws usage_error unless min_bits <= k <= max_bits.
    explicit Width(unsigned k);

    unsigned bits() const noexcept { return k_; }
    std::size_t limbs() const noexcept { return (k_ + limb_bits - 1) / limb_bits; }

    friend bool operator==(Width, Width) = default;
    friend auto operator<=>(Width, Width) = default;

private:
    unsigned k_;
};

class Residue {
public:
    // The zero residue.
    explicit Residue(Width w);

    // value mod 2^k
    static Residue from_u64(Width w, std::uint64_t value);
    static Residue one(Width w) { return from_u64(w, 1); }
    // 2^p mod 2^k; zero once p >= k.
    static Residue power_of_two(Width w, unsigned p);
    // Low-order limbs first; bits at or above k must be zero.
    static Residue from_limbs(Width w, std::span<const limb_t> limbs);

    // "0x"-prefixed hexadecimal, any number of leading zeros. The value must
    // fit in k bits.
    static Residue from_hex(Width w, std::string_view text);
    // Plain decimal digits. The value must fit in k bits.
    static Residue from_decimal(Width w, std::string_view text);

    // Minimal-length lowercase hex with 0x prefix ("0x0" for zero).
    std::string to_hex() const;
    std::string to_decimal() const;

    Width width() const noexcept { return width_; }
    std::span<const limb_t> limbs() const noexcept { return limbs_; }

    // Checked bit access; throws usage_error unless i < k.
    bool bit(unsigned i) const;
    bool test_bit(unsigned i) const noexcept {
        return (limbs_[i / limb_bits] >> (i % limb_bits)) & 1u;
    }
    // The low min(k, 64) bits.
    std::uint64_t low_u64() const noexcept { return limbs_[0]; }
    unsigned low_bits3() const noexcept { return static_cast<unsigned>(limbs_[0] & 7u); }

    // Checked; throws usage_error unless i < k.
    void set_bit(unsigned i);

    bool is_zero() const noexcept;
    bool is_odd() const noexcept { return limbs_[0] & 1u; }
    // Number of trailing zero bits; k for the zero residue.
    unsigned trailing_zeros() const noexcept;
    // True iff the value is below 2^n.
    bool fits_in(unsigned n) const noexcept;

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    friend Residue add(const Residue&, const Residue&);
    friend Residue sub(const Residue&, const Residue&);
    friend Residue neg(const Residue&);
    friend Residue truncate(const Residue&, Width);
    friend Residue mask_low(const Residue&, unsigned);
    friend Residue shift_left(const Residue&, unsigned);
    friend Residue shift_right(const Residue&, unsigned);
    friend void mul_into(Residue&, const Residue&, const Residue&, std::vector<limb_t>&);

    void mask_top() noexcept;

    Width width_;
    std::vector<limb_t> limbs_;
};

// All binary operations throw usage_error on width mismatch.
Residue add(const Residue& a, const Residue& b);
Residue sub(const Residue& a, const Residue& b);
Residue mul(const Residue& a, const Residue& b);
Residue neg(const Residue& a);

// Inverse of an odd residue by 2-adic Newton iteration; domain_error if even.
Residue inverse(const Residue& a);

Residue pow(const Residue& a, std::uint64_t exponent);
// The exponent is read as a plain nonnegative integer (its own width is
// irrelevant).
Residue pow(const Residue& a, const Residue& exponent);

// a mod 2^j as a width-j residue; usage_error if j > a.width().
Residue truncate(const Residue& a, Width j);
// a mod 2^n, keeping the width of a. n >= k returns a unchanged.
Residue mask_low(const Residue& a, unsigned n);

Residue shift_left(const Residue& a, unsigned n);
Residue shift_right(const Residue& a, unsigned n);

// Low-level in-place multiply used on hot paths: out = a * b mod 2^k.
// out may alias a or b. Widths are not checked.
void mul_into(Residue& out, const Residue& a, const Residue& b, std::vector<limb_t>& scratch);

} // namespace dlg2k

#pragma once

/*
 * Discrete logarithms modulo 2^k to a semi-primitive base h.
 *
 * Every odd A has a unique factorization A = (-1)^s h^e mod 2^k with
 * s in {0, 1} and 0 <= e < 2^(k-2). Every k-bit x factors further as
 * x = (-1)^s 2^p h^e, where p is the number of trailing zeros of x and
 * (s, e) is the logarithm of the odd part x >> p. Zero is represented by
 * the sentinel (0, k, 0).
 *
 * Exponents are stored as residues of the same width k whose value is kept
 * below 2^(k-2); exponent arithmetic is done at width k and masked.
 */

#include "dlg2k/kbit.hpp"
#include "dlg2k/root.hpp"

#include <cstddef>
#include <cstdint>

namespace dlg2k {

struct DlgPair {
    unsigned s = 0;
    Residue e;

    Width width() const noexcept { return e.width(); }

    // Checked construction: s in {0,1}, e < 2^(k-2).
    static DlgPair make(unsigned s, Residue e);
    static DlgPair make(Width w, unsigned s, std::uint64_t e) { return make(s, Residue::from_u64(w, e)); }

    friend bool operator==(const DlgPair&, const DlgPair&) = default;
};

struct DlgTriple {
    unsigned s = 0;
    unsigned p = 0;
    Residue e;

    Width width() const noexcept { return e.width(); }
    bool is_zero_sentinel() const noexcept { return p == width().bits(); }

    // Checked construction: s in {0,1}, p <= k, e < 2^(k-2).
    static DlgTriple make(unsigned s, unsigned p, Residue e);
    static DlgTriple make(Width w, unsigned s, unsigned p, std::uint64_t e) {
        return make(s, p, Residue::from_u64(w, e));
    }
    static DlgTriple zero(Width w) { return DlgTriple{0, w.bits(), Residue(w)}; }

    friend bool operator==(const DlgTriple&, const DlgTriple&) = default;
};

// Number of width-k multiplications spent inside one dlg call.
struct MulCounter {
    std::size_t count = 0;
};

// Bits of the exponent field: k - 2.
inline unsigned exponent_bits(Width w) noexcept { return w.bits() - 2; }

// Upper bound on multiplications per dlg call: 2(k-3) + 2.
inline std::size_t mul_bound(Width w) noexcept { return 2 * (std::size_t{w.bits()} - 3) + 2; }

/// 1 iff A is a negative power of the base (-A in <h>), 0 iff A is in <h>.
/// Reads only bits a1, a2 of A and bit h1 of the base: with h = 1 (mod 4)
/// positive powers have a1 = 0, with h = 3 (mod 4) they have a2 = 0.
/// domain_error for even A, usage_error on width mismatch.
unsigned classify_sign(const Residue& A, const Root& base);

/// Digit-serial discrete logarithm of an odd residue.
///
/// After the sign is removed, P = +-A is 1 or h modulo 8; one multiplication
/// by B in {1, h} makes it 1 mod 8. Then for i = 3 .. k-1 bit i of P is
/// cleared by multiplying with h^(2^(i-2)), which is 1 + 2^i modulo 2^(i+1),
/// while the exponent b collects 2^(i-2). At the end P = 1, so
/// +-A = h^(-b) and e = 2^(k-2) - b mod 2^(k-2).
///
/// Throws domain_error for even A (use factor_triple for arbitrary x) and
/// usage_error on width mismatch.
DlgPair dlg(const Residue& A, const Root& base, MulCounter& counter);
DlgPair dlg(const Residue& A, const Root& base);

// (-1)^s h^e mod 2^k.
Residue decode_pair(const DlgPair& pair, const Root& base);

// Canonical triple: p = trailing zeros of x, (s, e) = dlg(x >> p).
DlgTriple factor_triple(const Residue& x, const Root& base);

// (-1)^s 2^p h^e mod 2^k; zero when p >= k.
Residue decode_triple(const DlgTriple& t, const Root& base);

// Multiplication carried out on the factored forms.
DlgTriple log_multiply(const DlgTriple& a, const DlgTriple& b, const Root& base);

// Factorization of the inverse: (s, -e mod 2^(k-2)).
DlgPair invert_pair(const DlgPair& pair);

// Re-express a pair at base `from` as a pair at base `to`.
DlgPair rebase(const DlgPair& pair, const Root& from, const Root& to);

// dlg of A mod 2^j at the base truncated to width j.
DlgPair dlg_truncated(const Residue& A, const Root& base, Width j);

} // namespace dlg2k

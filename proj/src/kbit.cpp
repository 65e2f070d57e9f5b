#include "dlg2k/kbit.hpp"

#include "dlg2k/error.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace dlg2k {

namespace {

__extension__ typedef unsigned __int128 wide_t;

void require_same_width(const Residue& a, const Residue& b, const char* op) {
    if (a.width() != b.width()) {
        throw usage_error(std::string(op) + ": width mismatch (" + std::to_string(a.width().bits()) +
                          " vs " + std::to_string(b.width().bits()) + ")");
    }
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

Width::Width(unsigned k) : k_(k) {
    if (k < min_bits || k > max_bits) {
        throw usage_error("width k=" + std::to_string(k) + " outside [" + std::to_string(min_bits) + ", " +
                          std::to_string(max_bits) + "]");
    }
}

Residue::Residue(Width w) : width_(w), limbs_(w.limbs(), 0) {}

void Residue::mask_top() noexcept {
    const unsigned rem = width_.bits() % limb_bits;
    if (rem != 0) limbs_.back() &= (limb_t{1} << rem) - 1;
}

Residue Residue::from_u64(Width w, std::uint64_t value) {
    Residue r(w);
    r.limbs_[0] = value;
    r.mask_top();
    return r;
}

Residue Residue::power_of_two(Width w, unsigned p) {
    Residue r(w);
    if (p < w.bits()) r.limbs_[p / limb_bits] = limb_t{1} << (p % limb_bits);
    return r;
}

Residue Residue::from_limbs(Width w, std::span<const limb_t> limbs) {
    Residue r(w);
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        if (i < r.limbs_.size()) {
            r.limbs_[i] = limbs[i];
        } else if (limbs[i] != 0) {
            throw usage_error("value does not fit in " + std::to_string(w.bits()) + " bits");
        }
    }
    const limb_t top = r.limbs_.back();
    r.mask_top();
    if (top != r.limbs_.back()) throw usage_error("value does not fit in " + std::to_string(w.bits()) + " bits");
    return r;
}

Residue Residue::from_hex(Width w, std::string_view text) {
    if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
        throw usage_error("malformed hex value '" + std::string(text) + "': expected 0x prefix and digits");
    }
    text.remove_prefix(2);
    std::vector<limb_t> limbs((text.size() * 4 + limb_bits - 1) / limb_bits, 0);
    unsigned pos = 0;
    for (auto it = text.rbegin(); it != text.rend(); ++it, pos += 4) {
        const int d = hex_digit(*it);
        if (d < 0) throw usage_error("malformed hex value: bad digit '" + std::string(1, *it) + "'");
        limbs[pos / limb_bits] |= static_cast<limb_t>(d) << (pos % limb_bits);
    }
    return from_limbs(w, limbs);
}

Residue Residue::from_decimal(Width w, std::string_view text) {
    if (text.empty()) throw usage_error("malformed decimal value: empty");
    // Accumulate at the next limb boundary so overflow past k is detectable.
    std::vector<limb_t> acc(w.limbs() + 1, 0);
    for (char c : text) {
        if (c < '0' || c > '9') throw usage_error("malformed decimal value '" + std::string(text) + "'");
        limb_t carry = static_cast<limb_t>(c - '0');
        for (auto& l : acc) {
            const wide_t t = static_cast<wide_t>(l) * 10 + carry;
            l = static_cast<limb_t>(t);
            carry = static_cast<limb_t>(t >> limb_bits);
        }
        if (carry != 0 || acc.back() != 0) {
            throw usage_error("decimal value '" + std::string(text) + "' does not fit in " +
                              std::to_string(w.bits()) + " bits");
        }
    }
    return from_limbs(w, acc);
}

std::string Residue::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        for (int shift = static_cast<int>(limb_bits) - 4; shift >= 0; shift -= 4) {
            const unsigned d = (limbs_[i] >> shift) & 0xf;
            if (d != 0) started = true;
            if (started) out.push_back(digits[d]);
        }
    }
    if (out.empty()) out = "0";
    return "0x" + out;
}

std::string Residue::to_decimal() const {
    constexpr limb_t chunk = 10'000'000'000'000'000'000ull; // 10^19
    std::vector<limb_t> n = limbs_;
    std::vector<limb_t> parts;
    auto nonzero = [&] { return std::any_of(n.begin(), n.end(), [](limb_t l) { return l != 0; }); };
    while (nonzero()) {
        wide_t rem = 0;
        for (std::size_t i = n.size(); i-- > 0;) {
            const wide_t cur = (rem << limb_bits) | n[i];
            n[i] = static_cast<limb_t>(cur / chunk);
            rem = cur % chunk;
        }
        parts.push_back(static_cast<limb_t>(rem));
    }
    if (parts.empty()) return "0";
    std::string out = std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        std::string piece = std::to_string(parts[i]);
        out += std::string(19 - piece.size(), '0') + piece;
    }
    return out;
}

bool Residue::bit(unsigned i) const {
    if (i >= width_.bits()) {
        throw usage_error("bit index " + std::to_string(i) + " out of range for k=" + std::to_string(width_.bits()));
    }
    return test_bit(i);
}

void Residue::set_bit(unsigned i) {
    if (i >= width_.bits()) {
        throw usage_error("bit index " + std::to_string(i) + " out of range for k=" + std::to_string(width_.bits()));
    }
    limbs_[i / limb_bits] |= limb_t{1} << (i % limb_bits);
}

bool Residue::is_zero() const noexcept {
    return std::all_of(limbs_.begin(), limbs_.end(), [](limb_t l) { return l == 0; });
}

unsigned Residue::trailing_zeros() const noexcept {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] != 0) return static_cast<unsigned>(i * limb_bits + std::countr_zero(limbs_[i]));
    }
    return width_.bits();
}

bool Residue::fits_in(unsigned n) const noexcept {
    if (n >= width_.bits()) return true;
    const std::size_t li = n / limb_bits;
    const unsigned rem = n % limb_bits;
    if (rem != 0 && (limbs_[li] >> rem) != 0) return false;
    const std::size_t first_clear = rem != 0 ? li + 1 : li;
    return std::all_of(limbs_.begin() + static_cast<std::ptrdiff_t>(first_clear), limbs_.end(),
                       [](limb_t l) { return l == 0; });
}

Residue add(const Residue& a, const Residue& b) {
    require_same_width(a, b, "add");
    Residue r(a.width());
    limb_t carry = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        const wide_t t = static_cast<wide_t>(a.limbs_[i]) + b.limbs_[i] + carry;
        r.limbs_[i] = static_cast<limb_t>(t);
        carry = static_cast<limb_t>(t >> limb_bits);
    }
    r.mask_top();
    return r;
}

Residue sub(const Residue& a, const Residue& b) {
    require_same_width(a, b, "sub");
    Residue r(a.width());
    limb_t borrow = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        const limb_t x = a.limbs_[i];
        const limb_t y = b.limbs_[i];
        const limb_t d = x - y - borrow;
        borrow = (x < y) || (x - y < borrow) ? 1 : 0;
        r.limbs_[i] = d;
    }
    r.mask_top();
    return r;
}

Residue neg(const Residue& a) {
    // Two's complement: invert and add one.
    Residue r(a.width());
    limb_t carry = 1;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        const limb_t t = ~a.limbs_[i] + carry;
        carry = (carry != 0 && t == 0) ? 1 : 0;
        r.limbs_[i] = t;
    }
    r.mask_top();
    return r;
}

void mul_into(Residue& out, const Residue& a, const Residue& b, std::vector<limb_t>& scratch) {
    // Schoolbook product keeping only the n low limbs.
    const std::size_t n = a.limbs_.size();
    scratch.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const limb_t ai = a.limbs_[i];
        if (ai == 0) continue;
        limb_t carry = 0;
        for (std::size_t j = 0; i + j < n; ++j) {
            const wide_t t = static_cast<wide_t>(ai) * b.limbs_[j] + scratch[i + j] + carry;
            scratch[i + j] = static_cast<limb_t>(t);
            carry = static_cast<limb_t>(t >> limb_bits);
        }
    }
    if (out.width_ != a.width_) out = Residue(a.width_);
    std::copy(scratch.begin(), scratch.end(), out.limbs_.begin());
    out.mask_top();
}

Residue mul(const Residue& a, const Residue& b) {
    require_same_width(a, b, "mul");
    Residue r(a.width());
    std::vector<limb_t> scratch;
    mul_into(r, a, b, scratch);
    return r;
}

Residue inverse(const Residue& a) {
    if (!a.is_odd()) throw domain_error("inverse: " + a.to_hex() + " is even and has no inverse modulo 2^k");
    // a*a == 1 mod 8 for odd a, so x = a is correct to 3 bits; each Newton
    // step x <- x(2 - ax) doubles the number of correct low-order bits.
    const Width w = a.width();
    const Residue two = Residue::from_u64(w, 2);
    Residue x = a;
    for (unsigned correct = 3; correct < w.bits(); correct *= 2) {
        x = mul(x, sub(two, mul(a, x)));
    }
    assert(mul(a, x) == Residue::one(w));
    return x;
}

Residue pow(const Residue& a, const Residue& exponent) {
    const auto e = exponent.limbs();
    std::size_t top = e.size();
    while (top > 0 && e[top - 1] == 0) --top;
    Residue result = Residue::one(a.width());
    if (top == 0) return result;
    std::vector<limb_t> scratch;
    const unsigned nbits = static_cast<unsigned>((top - 1) * limb_bits + std::bit_width(e[top - 1]));
    for (unsigned i = nbits; i-- > 0;) {
        mul_into(result, result, result, scratch);
        if ((e[i / limb_bits] >> (i % limb_bits)) & 1u) mul_into(result, result, a, scratch);
    }
    return result;
}

Residue pow(const Residue& a, std::uint64_t exponent) {
    const limb_t e[1] = {exponent};
    return pow(a, Residue::from_limbs(Width(Width::max_bits), e));
}

Residue truncate(const Residue& a, Width j) {
    if (j > a.width()) {
        throw usage_error("truncate: target width " + std::to_string(j.bits()) + " exceeds " +
                          std::to_string(a.width().bits()));
    }
    Residue r(j);
    std::copy_n(a.limbs_.begin(), r.limbs_.size(), r.limbs_.begin());
    r.mask_top();
    return r;
}

Residue mask_low(const Residue& a, unsigned n) {
    Residue r = a;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        const std::size_t lo = i * limb_bits;
        if (lo >= n) {
            r.limbs_[i] = 0;
        } else if (n - lo < limb_bits) {
            r.limbs_[i] &= (limb_t{1} << (n - lo)) - 1;
        }
    }
    return r;
}

Residue shift_left(const Residue& a, unsigned n) {
    Residue r(a.width());
    if (n >= a.width().bits()) return r;
    const std::size_t ls = n / limb_bits;
    const unsigned bs = n % limb_bits;
    for (std::size_t i = r.limbs_.size(); i-- > ls;) {
        limb_t v = a.limbs_[i - ls] << bs;
        if (bs != 0 && i - ls > 0) v |= a.limbs_[i - ls - 1] >> (limb_bits - bs);
        r.limbs_[i] = v;
    }
    r.mask_top();
    return r;
}

Residue shift_right(const Residue& a, unsigned n) {
    Residue r(a.width());
    if (n >= a.width().bits()) return r;
    const std::size_t ls = n / limb_bits;
    const unsigned bs = n % limb_bits;
    const std::size_t count = r.limbs_.size();
    for (std::size_t i = 0; i + ls < count; ++i) {
        limb_t v = a.limbs_[i + ls] >> bs;
        if (bs != 0 && i + ls + 1 < count) v |= a.limbs_[i + ls + 1] << (limb_bits - bs);
        r.limbs_[i] = v;
    }
    return r;
}

} // namespace dlg2k

#include "dlg2k/root.hpp"

#include "dlg2k/error.hpp"

#include <cassert>

namespace dlg2k {

Root validate_root(const Residue& h) {
    if (!h.is_odd()) throw domain_error("base " + h.to_hex() + " is even; a semi-primitive root must be odd");
    const unsigned low = h.low_bits3();
    if (low != 3 && low != 5) {
        throw invalid_base_error("base " + h.to_hex() + " is " + std::to_string(low) +
                                 " mod 8; a semi-primitive root modulo 2^k must be 3 or 5 mod 8");
    }
    const Width w = h.width();
    std::vector<Residue> table;
    table.reserve(w.bits() - 2);
    table.push_back(h);
    std::vector<limb_t> scratch;
    for (unsigned j = 1; j + 3 <= w.bits(); ++j) {
        Residue sq(w);
        mul_into(sq, table.back(), table.back(), scratch);
        table.push_back(std::move(sq));
    }
    // h^(2^(k-3)) == 2^(k-1) + 1 for k > 3.
    if (w.bits() > 3) {
        const Residue expected = add(Residue::power_of_two(w, w.bits() - 1), Residue::one(w));
        if (table.back() != expected) {
            throw invalid_base_error("base " + h.to_hex() + ": h^(2^(k-3)) != 2^(k-1)+1");
        }
    }
    return Root(h, low == 3 ? Mod8Class::three : Mod8Class::five, std::move(table));
}

Root Root::truncated(Width j) const {
    std::vector<Residue> table;
    table.reserve(j.bits() - 2);
    for (unsigned i = 0; i + 3 <= j.bits(); ++i) table.push_back(truncate(table_[i], j));
    return Root(truncate(h_, j), class_, std::move(table));
}

Residue multiplicative_order(const Residue& a) {
    if (!a.is_odd()) throw domain_error("multiplicative_order: " + a.to_hex() + " is even");
    // The unit group has order 2^(k-1), so the order of a is 2^t with t the
    // number of squarings needed to reach 1.
    const Width w = a.width();
    const Residue one = Residue::one(w);
    Residue x = a;
    unsigned t = 0;
    while (x != one) {
        x = mul(x, x);
        ++t;
    }
    assert(t <= w.bits() - 1);
    return Residue::power_of_two(w, t);
}

std::vector<Root> enumerate_roots(Width k) {
    if (k.bits() > enumerate_roots_max_bits) {
        throw usage_error("enumerate_roots: k=" + std::to_string(k.bits()) + " exceeds " +
                          std::to_string(enumerate_roots_max_bits) + "; use validate_root for a single base");
    }
    std::vector<Root> roots;
    roots.reserve(std::size_t{1} << (k.bits() - 2));
    const std::uint64_t limit = std::uint64_t{1} << k.bits();
    for (std::uint64_t h = 3; h < limit; h += 2) {
        const unsigned low = h & 7u;
        if (low == 3 || low == 5) roots.push_back(validate_root(Residue::from_u64(k, h)));
    }
    return roots;
}

} // namespace dlg2k

#pragma once

// Semi-primitive roots modulo 2^k.

#include "dlg2k/kbit.hpp"

#include <vector>

namespace dlg2k {

// Low three bits of a usable base: 011 (h = 3 mod 8, h1 = 1) or 101 (h = 5 mod 8, h1 = 0).
enum class Mod8Class : unsigned { three = 3, five = 5 };

/// A validated base h with h = 3 or 5 (mod 8), together with the squarings
/// h^(2^j) for 0 <= j <= k-3. Immutable once built.
class Root {
public:
    Width width() const noexcept { return h_.width(); }
    const Residue& h() const noexcept { return h_; }
    Mod8Class mod8_class() const noexcept { return class_; }
    // Bit h1 of the base, the input to the sign test.
    bool h1() const noexcept { return class_ == Mod8Class::three; }

    // h^(2^j), 0 <= j <= k-3.
    const Residue& power(unsigned j) const { return table_.at(j); }
    const std::vector<Residue>& power_table() const noexcept { return table_; }

    // The same base read modulo 2^j, j <= k. Its table is the truncated table
    // of this root; no squarings are redone.
    Root truncated(Width j) const;

private:
    friend Root validate_root(const Residue& h);

    Root(Residue h, Mod8Class c, std::vector<Residue> table)
        : h_(std::move(h)), class_(c), table_(std::move(table)) {}

    Residue h_;
    Mod8Class class_;
    std::vector<Residue> table_;
};

// Throws domain_error for even h and invalid_base_error for h = 1 or 7 (mod 8).
Root validate_root(const Residue& h);

// Least t >= 1 with a^t == 1, returned as a residue of a's width (the order
// divides 2^(k-2) and therefore always fits). domain_error if a is even.
Residue multiplicative_order(const Residue& a);

// All semi-primitive roots below 2^k in ascending order. usage_error for k > 16.
inline constexpr unsigned enumerate_roots_max_bits = 16;
std::vector<Root> enumerate_roots(Width k);

} // namespace dlg2k

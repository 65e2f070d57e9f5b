#pragma once

/*
 * Reference implementations for certifying the fast paths at small k.
 *
 * Nothing here uses the root power table or the digit-serial algorithm:
 * logarithms come from tables filled by repeated multiplication, inverses
 * from the extended Euclidean algorithm on arbitrary-precision integers.
 * The one exception is sampled vector generation at large k, where the
 * engine supplies the triple and the oracle re-derives x from it
 * independently before emitting the vector.
 */

#include "dlg2k/dlg.hpp"
#include "dlg2k/kbit.hpp"
#include "dlg2k/root.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace dlg2k::oracle {

inline constexpr unsigned table_max_bits = 20;
inline constexpr unsigned exhaustive_vectors_max_bits = 16;

/// Forward table h^i for 0 <= i < 2^(k-2) and the reverse map from every odd
/// residue to (s, e). Built for any odd h, valid base or not; for a rejected
/// base the reverse map has collisions and gaps, which is what
/// is_bijective() reports.
class DlgTable {
public:
    explicit DlgTable(const Residue& h);

    Width width() const noexcept { return h_.width(); }
    const Residue& h() const noexcept { return h_; }
    const std::vector<Residue>& forward() const noexcept { return forward_; }

    // (s, e) with A == (-1)^s h^e, the smallest such e. nullopt if A is not
    // reached.
    std::optional<DlgPair> lookup(const Residue& A) const;

    bool forward_distinct() const noexcept { return forward_distinct_; }
    // Every odd residue is reached by exactly one (s, e).
    bool covers_all_odds_once() const noexcept { return covers_once_; }
    bool is_bijective() const noexcept { return forward_distinct_ && covers_once_; }

private:
    struct Entry {
        unsigned s;
        std::uint32_t e;
    };

    Residue h_;
    std::vector<Residue> forward_;
    std::vector<std::optional<Entry>> backward_; // indexed by A >> 1
    bool forward_distinct_ = true;
    bool covers_once_ = true;
};

// Linear scan over h^0, h^1, ... comparing against A and -A. usage_error
// above table_max_bits, domain_error for even A.
DlgPair brute_force_dlg(const Residue& A, const Root& base);

// Extended Euclid on (A, 2^k). domain_error for even A.
Residue extended_gcd_inverse(const Residue& A);

// (-1)^s 2^p h^e mod 2^k evaluated with arbitrary-precision integers.
Residue reference_decode(const DlgTriple& t, const Residue& h);

// Sampled residues come from std::mt19937_64 seeded with the given seed:
// each residue consumes ceil(k/64) outputs, least-significant limb first,
// and the top limb is masked to k bits. Odd samples set bit 0.
Residue random_residue(Width w, std::mt19937_64& rng);
Residue random_odd_residue(Width w, std::mt19937_64& rng);

struct Exhaustive {};
struct Sampled {
    std::uint64_t count;
    std::uint64_t seed;
};
using VectorMode = std::variant<Exhaustive, Sampled>;

/// One conformance record. h and x are 0x-prefixed hex, e is decimal.
struct TestVector {
    unsigned k = 0;
    std::string h;
    std::string x;
    unsigned s = 0;
    unsigned p = 0;
    std::string e;

    friend bool operator==(const TestVector&, const TestVector&) = default;
};

// One JSON object per line with keys in the order k, h, x, s, p, e.
std::string to_jsonl(const TestVector& v);
TestVector parse_jsonl(const std::string& line);

// Re-derives x from (k, h, s, p, e) with reference_decode.
bool check_vector(const TestVector& v);

/// Exhaustive: every x in [0, 2^k) ascending, k <= 16, from a DlgTable.
/// Sampled: `count` residues drawn by random_residue from `seed`.
void generate_vectors(const Root& base, const VectorMode& mode, const std::function<void(const TestVector&)>& sink);
std::vector<TestVector> generate_vectors(const Root& base, const VectorMode& mode);

} // namespace dlg2k::oracle

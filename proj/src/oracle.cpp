#include "dlg2k/oracle.hpp"

#include "dlg2k/error.hpp"
#include "dlg2k/serialize.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>

namespace dlg2k::oracle {

namespace {

using boost::multiprecision::cpp_int;

cpp_int to_big(const Residue& r) {
    cpp_int v;
    const auto limbs = r.limbs();
    for (std::size_t i = limbs.size(); i-- > 0;) {
        v <<= limb_bits;
        v |= limbs[i];
    }
    return v;
}

Residue from_big(Width w, cpp_int v) {
    std::vector<limb_t> limbs(w.limbs());
    for (auto& l : limbs) {
        l = static_cast<limb_t>(v & std::numeric_limits<limb_t>::max());
        v >>= limb_bits;
    }
    return Residue::from_limbs(w, limbs);
}

void require_table_width(Width w, const char* op) {
    if (w.bits() > table_max_bits) {
        throw usage_error(std::string(op) + ": k=" + std::to_string(w.bits()) + " exceeds the table limit " +
                          std::to_string(table_max_bits));
    }
}

} // namespace

DlgTable::DlgTable(const Residue& h) : h_(h) {
    require_table_width(h.width(), "DlgTable");
    if (!h.is_odd()) throw domain_error("DlgTable: base " + h.to_hex() + " is even");
    const Width w = h.width();
    const std::size_t n = std::size_t{1} << (w.bits() - 2);
    const std::size_t odds = std::size_t{1} << (w.bits() - 1);
    backward_.assign(odds, std::nullopt);

    forward_.reserve(n);
    Residue x = Residue::one(w);
    for (std::size_t i = 0; i < n; ++i) {
        forward_.push_back(x);
        x = mul(x, h);
    }

    // Positive powers first, so a lookup that collides keeps the smallest
    // positive representative.
    for (unsigned s = 0; s < 2; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const Residue v = s ? neg(forward_[i]) : forward_[i];
            auto& slot = backward_[v.low_u64() >> 1];
            if (slot) {
                covers_once_ = false;
                if (s == 0) forward_distinct_ = false;
                continue;
            }
            slot = Entry{s, static_cast<std::uint32_t>(i)};
        }
    }
    for (const auto& slot : backward_) {
        if (!slot) covers_once_ = false;
    }
}

std::optional<DlgPair> DlgTable::lookup(const Residue& A) const {
    if (A.width() != width()) throw usage_error("DlgTable::lookup: width mismatch");
    if (!A.is_odd()) throw domain_error("DlgTable::lookup: " + A.to_hex() + " is even");
    const auto& slot = backward_[A.low_u64() >> 1];
    if (!slot) return std::nullopt;
    return DlgPair{slot->s, Residue::from_u64(width(), slot->e)};
}

DlgPair brute_force_dlg(const Residue& A, const Root& base) {
    const Width w = A.width();
    if (w != base.width()) throw usage_error("brute_force_dlg: width mismatch");
    require_table_width(w, "brute_force_dlg");
    if (!A.is_odd()) throw domain_error("brute_force_dlg: " + A.to_hex() + " is even");
    const Residue minus_a = neg(A);
    const std::uint64_t n = std::uint64_t{1} << (w.bits() - 2);
    Residue x = Residue::one(w);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (x == A) return DlgPair{0, Residue::from_u64(w, i)};
        if (x == minus_a) return DlgPair{1, Residue::from_u64(w, i)};
        x = mul(x, base.h());
    }
    throw std::logic_error("brute_force_dlg: " + A.to_hex() + " not reached from base " + base.h().to_hex());
}

Residue extended_gcd_inverse(const Residue& A) {
    if (!A.is_odd()) throw domain_error("extended_gcd_inverse: " + A.to_hex() + " is even");
    const cpp_int modulus = cpp_int(1) << A.width().bits();
    cpp_int old_r = to_big(A), r = modulus;
    cpp_int old_t = 1, t = 0;
    while (r != 0) {
        const cpp_int q = old_r / r;
        cpp_int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r != 1) throw std::logic_error("extended_gcd_inverse: gcd != 1");
    cpp_int inv = old_t % modulus;
    if (inv < 0) inv += modulus;
    return from_big(A.width(), inv);
}

Residue reference_decode(const DlgTriple& t, const Residue& h) {
    const Width w = h.width();
    const cpp_int modulus = cpp_int(1) << w.bits();
    if (t.p >= w.bits()) return Residue(w);
    cpp_int v = boost::multiprecision::powm(to_big(h), to_big(t.e), modulus);
    if (t.s) v = (modulus - v) % modulus;
    v = (v << t.p) % modulus;
    return from_big(w, v);
}

Residue random_residue(Width w, std::mt19937_64& rng) {
    std::vector<limb_t> limbs(w.limbs());
    for (auto& l : limbs) l = rng();
    const unsigned rem = w.bits() % limb_bits;
    if (rem != 0) limbs.back() &= (limb_t{1} << rem) - 1;
    return Residue::from_limbs(w, limbs);
}

Residue random_odd_residue(Width w, std::mt19937_64& rng) {
    Residue r = random_residue(w, rng);
    r.set_bit(0);
    return r;
}

std::string to_jsonl(const TestVector& v) {
    ordered_json j;
    j["k"] = v.k;
    j["h"] = v.h;
    j["x"] = v.x;
    j["s"] = v.s;
    j["p"] = v.p;
    j["e"] = v.e;
    return j.dump();
}

TestVector parse_jsonl(const std::string& line) {
    try {
        const auto j = ordered_json::parse(line);
        return TestVector{j.at("k").get<unsigned>(), j.at("h").get<std::string>(), j.at("x").get<std::string>(),
                          j.at("s").get<unsigned>(), j.at("p").get<unsigned>(), j.at("e").get<std::string>()};
    } catch (const nlohmann::json::exception& ex) {
        throw usage_error(std::string("malformed test vector: ") + ex.what());
    }
}

bool check_vector(const TestVector& v) {
    const Width w(v.k);
    const Residue h = Residue::from_hex(w, v.h);
    const DlgTriple t = DlgTriple::make(v.s, v.p, Residue::from_decimal(w, v.e));
    return reference_decode(t, h) == Residue::from_hex(w, v.x);
}

void generate_vectors(const Root& base, const VectorMode& mode, const std::function<void(const TestVector&)>& sink) {
    const Width w = base.width();
    const std::string h = base.h().to_hex();
    auto emit = [&](const Residue& x, const DlgTriple& t) {
        sink(TestVector{w.bits(), h, x.to_hex(), t.s, t.p, t.e.to_decimal()});
    };

    if (std::holds_alternative<Exhaustive>(mode)) {
        if (w.bits() > exhaustive_vectors_max_bits) {
            throw usage_error("exhaustive vectors need k <= " + std::to_string(exhaustive_vectors_max_bits) +
                              ", got k=" + std::to_string(w.bits()) + "; use sampled mode");
        }
        const DlgTable table(base.h());
        const std::uint64_t limit = std::uint64_t{1} << w.bits();
        for (std::uint64_t value = 0; value < limit; ++value) {
            const Residue x = Residue::from_u64(w, value);
            if (x.is_zero()) {
                emit(x, DlgTriple::zero(w));
                continue;
            }
            const unsigned p = x.trailing_zeros();
            const auto pair = table.lookup(shift_right(x, p));
            if (!pair) throw std::logic_error("generate_vectors: table is not bijective for " + h);
            emit(x, DlgTriple{pair->s, p, pair->e});
        }
        return;
    }

    const auto& sampled = std::get<Sampled>(mode);
    std::mt19937_64 rng(sampled.seed);
    for (std::uint64_t i = 0; i < sampled.count; ++i) {
        const Residue x = random_residue(w, rng);
        const DlgTriple t = factor_triple(x, base);
        if (reference_decode(t, base.h()) != x) {
            throw std::logic_error("generate_vectors: engine triple for " + x.to_hex() + " does not decode");
        }
        emit(x, t);
    }
}

std::vector<TestVector> generate_vectors(const Root& base, const VectorMode& mode) {
    std::vector<TestVector> out;
    generate_vectors(base, mode, [&](const TestVector& v) { out.push_back(v); });
    return out;
}

} // namespace dlg2k::oracle

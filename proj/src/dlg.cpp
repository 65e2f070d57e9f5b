#include "dlg2k/dlg.hpp"

#include "dlg2k/error.hpp"

#include <cassert>
#include <string>

namespace dlg2k {

namespace {

void require_width(Width a, Width b, const char* op) {
    if (a != b) {
        throw usage_error(std::string(op) + ": width mismatch (" + std::to_string(a.bits()) + " vs " +
                          std::to_string(b.bits()) + ")");
    }
}

void require_odd(const Residue& A, const char* op) {
    if (!A.is_odd()) {
        throw domain_error(std::string(op) + ": " + A.to_hex() +
                           " is even; factor out the power of two first (factor_triple)");
    }
}

void require_exponent(unsigned s, const Residue& e) {
    if (s > 1) throw usage_error("sign bit must be 0 or 1, got " + std::to_string(s));
    if (!e.fits_in(exponent_bits(e.width()))) {
        throw usage_error("exponent " + e.to_decimal() + " is not below 2^" + std::to_string(exponent_bits(e.width())));
    }
}

} // namespace

DlgPair DlgPair::make(unsigned s, Residue e) {
    require_exponent(s, e);
    return DlgPair{s, std::move(e)};
}

DlgTriple DlgTriple::make(unsigned s, unsigned p, Residue e) {
    require_exponent(s, e);
    if (p > e.width().bits()) {
        throw usage_error("dyadic valuation p=" + std::to_string(p) + " exceeds k=" + std::to_string(e.width().bits()));
    }
    return DlgTriple{s, p, std::move(e)};
}

unsigned classify_sign(const Residue& A, const Root& base) {
    require_width(A.width(), base.width(), "classify_sign");
    require_odd(A, "classify_sign");
    // h1 = 0: positive powers have a1 = 0.  h1 = 1: positive powers have a2 = 0.
    return base.h1() ? A.test_bit(2) : A.test_bit(1);
}

DlgPair dlg(const Residue& A, const Root& base, MulCounter& counter) {
    require_width(A.width(), base.width(), "dlg");
    require_odd(A, "dlg");
    const Width w = A.width();
    const unsigned k = w.bits();

    const unsigned s = classify_sign(A, base);
    Residue P = s ? neg(A) : A;

    Residue B = Residue::one(w);
    Residue b(w);
    if (P.low_bits3() == base.h().low_bits3()) {
        B = base.h();
        b.set_bit(0);
    } else {
        assert(P.low_bits3() == 1);
    }

    std::vector<limb_t> scratch;
    mul_into(P, P, B, scratch);
    ++counter.count;

    for (unsigned i = 3; i < k; ++i) {
        if (!P.test_bit(i)) continue;
        const Residue& step = base.power(i - 2);
        b.set_bit(i - 2);
        mul_into(B, B, step, scratch);
        mul_into(P, P, step, scratch);
        counter.count += 2;
    }
    assert(P == Residue::one(w));
    assert(counter.count <= mul_bound(w));

    return DlgPair{s, mask_low(neg(b), exponent_bits(w))};
}

DlgPair dlg(const Residue& A, const Root& base) {
    MulCounter counter;
    return dlg(A, base, counter);
}

Residue decode_pair(const DlgPair& pair, const Root& base) {
    require_width(pair.width(), base.width(), "decode_pair");
    const Width w = pair.width();
    // h has order 2^(k-2); h^e is the product of the cached h^(2^j) over the
    // set bits j of e mod 2^(k-2).
    const Residue e = mask_low(pair.e, exponent_bits(w));
    Residue r = Residue::one(w);
    std::vector<limb_t> scratch;
    for (unsigned j = 0; j < exponent_bits(w); ++j) {
        if (e.test_bit(j)) mul_into(r, r, base.power(j), scratch);
    }
    return pair.s ? neg(r) : r;
}

DlgTriple factor_triple(const Residue& x, const Root& base) {
    require_width(x.width(), base.width(), "factor_triple");
    if (x.is_zero()) return DlgTriple::zero(x.width());
    const unsigned p = x.trailing_zeros();
    DlgPair odd = dlg(shift_right(x, p), base);
    return DlgTriple{odd.s, p, std::move(odd.e)};
}

Residue decode_triple(const DlgTriple& t, const Root& base) {
    require_width(t.width(), base.width(), "decode_triple");
    if (t.p >= t.width().bits()) return Residue(t.width());
    return shift_left(decode_pair(DlgPair{t.s, t.e}, base), t.p);
}

DlgTriple log_multiply(const DlgTriple& a, const DlgTriple& b, const Root& base) {
    require_width(a.width(), b.width(), "log_multiply");
    require_width(a.width(), base.width(), "log_multiply");
    const Width w = a.width();
    const unsigned p = a.p + b.p;
    if (p >= w.bits()) return DlgTriple::zero(w);
    return DlgTriple{a.s ^ b.s, p, mask_low(add(a.e, b.e), exponent_bits(w))};
}

DlgPair invert_pair(const DlgPair& pair) {
    return DlgPair{pair.s, mask_low(neg(pair.e), exponent_bits(pair.width()))};
}

DlgPair rebase(const DlgPair& pair, const Root& from, const Root& to) {
    require_width(pair.width(), from.width(), "rebase");
    require_width(from.width(), to.width(), "rebase");
    const Width w = pair.width();
    const unsigned ebits = exponent_bits(w);
    // to.h = (-1)^sb from.h^eb with eb odd, so from.h^e = to.h^(e / eb) up to
    // the sign (-1)^(sb * e').
    const DlgPair target = dlg(to.h(), from);
    assert(target.e.is_odd());
    Residue e = mask_low(mul(pair.e, inverse(target.e)), ebits);
    const unsigned s = pair.s ^ (target.s & static_cast<unsigned>(e.is_odd()));
    return DlgPair{s, std::move(e)};
}

DlgPair dlg_truncated(const Residue& A, const Root& base, Width j) {
    require_width(A.width(), base.width(), "dlg_truncated");
    require_odd(A, "dlg_truncated");
    return dlg(truncate(A, j), base.truncated(j));
}

} // namespace dlg2k

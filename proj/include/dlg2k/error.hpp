#pragma once

#include <stdexcept>
#include <string>

namespace dlg2k {

// Caller misuse: mismatched widths, out-of-range indices, malformed input.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request, e.g. the inverse of an even residue.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An odd h whose low three bits are neither 011 nor 101.
class invalid_base_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace dlg2k

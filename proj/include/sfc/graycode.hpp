#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/permutation.hpp"

namespace sfc {

/// Fixed-width base-b number, digit 0 most significant. Used for ranks and locations.
struct BaseBNumber {
    int base = 2;
    std::vector<std::uint8_t> digits;

    static BaseBNumber from_int(std::uint64_t value, int base, int width);
    static BaseBNumber parse(std::string_view text, int base);

    int width() const { return static_cast<int>(digits.size()); }
    std::uint64_t to_int() const;
    int digit_sum() const;
    std::string str() const;

    friend bool operator==(const BaseBNumber&, const BaseBNumber&) = default;
};

/// Reflected Gray code: every digit after an odd digit is replaced by b-1-digit.
BaseBNumber rgc_encode(const BaseBNumber& r);
/// Inverse of rgc_encode, by the Forward-flag scan.
BaseBNumber rgc_decode(const BaseBNumber& c);

/// Drops digit i.
BaseBNumber take_out(const BaseBNumber& x, int i);
/// Keeps the numbers whose digit i equals j and drops that digit from each.
std::vector<BaseBNumber> reduce(const std::vector<BaseBNumber>& seq, int i, int j);
/// Replaces digit i by b-1-digit.
BaseBNumber mirror_digit(const BaseBNumber& x, int i);
/// Inserts digit j so that it becomes digit i of the result.
BaseBNumber put_in(const BaseBNumber& x, int i, int j);

/// The full RGC sequence of width d, in rank order.
std::vector<BaseBNumber> rgc_sequence(int base, int d);

}  // namespace sfc

#include "sfc/graycode.hpp"

#include <numeric>
#include <stdexcept>

namespace sfc {

BaseBNumber BaseBNumber::from_int(std::uint64_t value, int base, int width) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    BaseBNumber n{base, std::vector<std::uint8_t>(width, 0)};
    for (int i = width; i-- > 0;) {
        n.digits[i] = static_cast<std::uint8_t>(value % base);
        value /= base;
    }
    if (value) throw std::invalid_argument("value does not fit in width");
    return n;
}

BaseBNumber BaseBNumber::parse(std::string_view text, int base) {
    BaseBNumber n{base, {}};
    for (char ch : text) {
        if (ch < '0' || ch >= '0' + base) throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
        n.digits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return n;
}

std::uint64_t BaseBNumber::to_int() const {
    std::uint64_t v = 0;
    for (auto d : digits) v = v * base + d;
    return v;
}

int BaseBNumber::digit_sum() const { return std::accumulate(digits.begin(), digits.end(), 0); }

std::string BaseBNumber::str() const {
    std::string s;
    for (auto d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

BaseBNumber rgc_encode(const BaseBNumber& r) {
    BaseBNumber c = r;
    bool reflect = false;
    for (auto& d : c.digits) {
        if (reflect) d = static_cast<std::uint8_t>(r.base - 1 - d);
        // Reflections apply in sequence, so the parity that matters is the digit after reflection.
        if (d & 1) reflect = !reflect;
    }
    return c;
}

BaseBNumber rgc_decode(const BaseBNumber& c) {
    BaseBNumber r = c;
    bool forward = true;
    for (auto& d : r.digits) {
        const bool odd = d & 1;
        if (!forward) d = static_cast<std::uint8_t>(c.base - 1 - d);
        if (odd) forward = !forward;
    }
    return r;
}

BaseBNumber take_out(const BaseBNumber& x, int i) {
    if (i < 0 || i >= x.width()) throw std::out_of_range("take_out: index out of range");
    BaseBNumber y = x;
    y.digits.erase(y.digits.begin() + i);
    return y;
}

std::vector<BaseBNumber> reduce(const std::vector<BaseBNumber>& seq, int i, int j) {
    std::vector<BaseBNumber> out;
    for (const auto& x : seq)
        if (x.digits.at(i) == j) out.push_back(take_out(x, i));
    return out;
}

BaseBNumber mirror_digit(const BaseBNumber& x, int i) {
    if (i < 0 || i >= x.width()) throw std::out_of_range("mirror_digit: index out of range");
    BaseBNumber y = x;
    y.digits[i] = static_cast<std::uint8_t>(x.base - 1 - x.digits[i]);
    return y;
}

BaseBNumber put_in(const BaseBNumber& x, int i, int j) {
    if (i < 0 || i > x.width()) throw std::out_of_range("put_in: index out of range");
    if (j < 0 || j >= x.base) throw std::invalid_argument("put_in: digit out of range");
    BaseBNumber y = x;
    y.digits.insert(y.digits.begin() + i, static_cast<std::uint8_t>(j));
    return y;
}

std::vector<BaseBNumber> rgc_sequence(int base, int d) {
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) n *= base;
    std::vector<BaseBNumber> out;
    out.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) out.push_back(rgc_encode(BaseBNumber::from_int(r, base, d)));
    return out;
}

}  // namespace sfc

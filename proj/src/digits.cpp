#include "sfc/digits.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sfc {

namespace {

void check_base(int base) {
    if (base != 2 && base != 3) throw std::invalid_argument("base must be 2 or 3");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct RawNumber {
    bool negative = false;
    std::string_view integer;
    std::string_view fraction;
};

// Splits "[-+]int[.frac]" without interpreting the digits.
RawNumber split_number(std::string_view text) {
    std::string_view s = trim(text);
    RawNumber raw;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        raw.negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    raw.integer = s.substr(0, dot);
    if (dot != std::string_view::npos) raw.fraction = s.substr(dot + 1);
    if (raw.integer.empty() && raw.fraction.empty())
        throw std::invalid_argument("malformed coordinate '" + std::string(text) + "'");
    return raw;
}

std::vector<std::uint8_t> read_digits(std::string_view s, int radix, std::string_view whole) {
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch < '0' || ch >= '0' + radix)
            throw std::invalid_argument("malformed coordinate '" + std::string(whole) + "'");
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

void strip_leading_zeros(std::vector<std::uint8_t>& v) {
    auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    v.erase(v.begin(), it);
}

// Exact conversion of a decimal integer by repeated division.
std::vector<std::uint8_t> decimal_integer_to_base(std::vector<std::uint8_t> dec, int base) {
    strip_leading_zeros(dec);
    std::vector<std::uint8_t> out;
    while (!dec.empty()) {
        int rem = 0;
        std::vector<std::uint8_t> quot;
        for (auto d : dec) {
            const int cur = rem * 10 + d;
            if (!quot.empty() || cur / base) quot.push_back(static_cast<std::uint8_t>(cur / base));
            rem = cur % base;
        }
        out.push_back(static_cast<std::uint8_t>(rem));
        dec = std::move(quot);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Repeated multiply-by-base; the carry out of the decimal fraction is the next digit.
std::vector<std::uint8_t> decimal_fraction_to_base(std::vector<std::uint8_t> dec, int base, int precision) {
    std::vector<std::uint8_t> out;
    out.reserve(precision);
    for (int k = 0; k < precision; ++k) {
        int carry = 0;
        for (auto it = dec.rbegin(); it != dec.rend(); ++it) {
            const int v = *it * base + carry;
            *it = static_cast<std::uint8_t>(v % 10);
            carry = v / 10;
        }
        out.push_back(static_cast<std::uint8_t>(carry));
    }
    return out;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

DigitString DigitString::make(int base, std::vector<std::uint8_t> digits) {
    check_base(base);
    for (auto d : digits)
        if (d >= base) throw std::invalid_argument("digit out of range for base");
    return DigitString{base, std::move(digits)};
}

DigitString DigitString::from_digits(std::string_view text, int base) {
    check_base(base);
    return DigitString{base, read_digits(text, base, text)};
}

std::string DigitString::str() const {
    std::string s;
    s.reserve(digits.size());
    for (auto d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

Point Point::make(int base, std::vector<DigitString> coords) {
    check_base(base);
    if (coords.empty()) throw std::invalid_argument("point dimension must be at least 1");
    for (const auto& c : coords)
        if (c.base != base) throw std::invalid_argument("mixed bases in point");
    return Point{base, std::move(coords)};
}

Point Point::from_digits(std::initializer_list<std::string_view> coords, int base) {
    std::vector<DigitString> cs;
    for (auto c : coords) cs.push_back(DigitString::from_digits(c, base));
    return make(base, std::move(cs));
}

std::pair<int, DigitString> extract(const DigitString& s) {
    if (s.digits.empty()) return {0, s};
    return {s.digits.front(), DigitString{s.base, {s.digits.begin() + 1, s.digits.end()}}};
}

bool Scalar::is_zero() const {
    auto nz = [](std::uint8_t d) { return d != 0; };
    return std::none_of(integer.begin(), integer.end(), nz) && std::none_of(fraction.begin(), fraction.end(), nz);
}

Scalar parse_scalar(std::string_view text, int base, int precision, Notation notation) {
    check_base(base);
    if (precision < 0) throw std::invalid_argument("precision must be non-negative");
    Scalar s;
    s.base = base;
    if (notation == Notation::decimal) {
        const RawNumber raw = split_number(text);
        s.negative = raw.negative;
        s.integer = decimal_integer_to_base(read_digits(raw.integer, 10, text), base);
        s.fraction = decimal_fraction_to_base(read_digits(raw.fraction, 10, text), base, precision);
    } else {
        std::string_view body = trim(text);
        const auto sub = body.rfind('_');
        if (sub != std::string_view::npos) {
            const std::string_view tag = body.substr(sub + 1);
            if (tag != "2" && tag != "3") throw std::invalid_argument("malformed base suffix in '" + std::string(text) + "'");
            if (tag[0] - '0' != base) throw std::invalid_argument("mixed bases: '" + std::string(text) + "'");
            body = body.substr(0, sub);
        }
        const RawNumber raw = split_number(body);
        s.negative = raw.negative;
        s.integer = read_digits(raw.integer, base, text);
        s.fraction = read_digits(raw.fraction, base, text);
    }
    strip_leading_zeros(s.integer);
    if (s.is_zero()) s.negative = false;
    return s;
}

ExtendedPoint parse_extended_point(std::string_view text, int base, int precision, Notation notation) {
    ExtendedPoint p;
    p.base = base;
    for (auto part : split_commas(text)) p.coords.push_back(parse_scalar(part, base, precision, notation));
    return p;
}

Point parse_point(std::string_view text, int base, int precision, Notation notation) {
    const ExtendedPoint ext = parse_extended_point(text, base, precision, notation);
    std::vector<DigitString> coords;
    for (const auto& c : ext.coords) {
        if (c.negative || !c.integer.empty())
            throw std::invalid_argument("coordinate outside [0,1) in '" + std::string(text) + "'");
        coords.push_back(DigitString{base, c.fraction});
    }
    return Point::make(base, std::move(coords));
}

std::string render_point(const Point& p) {
    std::string out;
    for (int i = 0; i < p.dim(); ++i) {
        if (i) out.push_back(',');
        out += "0.";
        out += p.coords[i].str();
    }
    return out;
}

ExtendedPoint extend(const Point& p) {
    ExtendedPoint e;
    e.base = p.base;
    for (const auto& c : p.coords) e.coords.push_back(Scalar{p.base, false, {}, c.digits});
    return e;
}

std::pair<Point, Point> rescale_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, int levels) {
    if (p.base != q.base || p.dim() != q.dim()) throw std::invalid_argument("point mismatch");
    if (levels < 1) throw std::invalid_argument("levels must be positive");
    const auto step = static_cast<std::size_t>(levels);
    std::size_t steps = 0;
    for (const auto* pt : {&p, &q})
        for (const auto& c : pt->coords) {
            if (c.negative) throw std::invalid_argument("negative coordinate");
            steps = std::max(steps, (c.integer.size() + step - 1) / step);
        }
    auto scale = [&](const ExtendedPoint& e) {
        std::vector<DigitString> coords;
        for (const auto& c : e.coords) {
            std::vector<std::uint8_t> d(step * steps - c.integer.size(), 0);
            d.insert(d.end(), c.integer.begin(), c.integer.end());
            d.insert(d.end(), c.fraction.begin(), c.fraction.end());
            coords.push_back(DigitString{e.base, std::move(d)});
        }
        return Point::make(e.base, std::move(coords));
    };
    return {scale(p), scale(q)};
}

int compare_value(const DigitString& a, const DigitString& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int x = i < a.size() ? a.digits[i] : 0;
        const int y = i < b.size() ? b.digits[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

DigitString midpoint(const DigitString& a, const DigitString& b, int max_digits) {
    if (a.base != b.base) throw std::invalid_argument("mixed bases");
    const int base = a.base;
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<std::uint8_t> sum(n);
    int carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        const int v = (i < a.size() ? a.digits[i] : 0) + (i < b.size() ? b.digits[i] : 0) + carry;
        sum[i] = static_cast<std::uint8_t>(v % base);
        carry = v / base;
    }
    std::vector<std::uint8_t> out;
    int rem = carry;
    for (auto s : sum) {
        const int cur = rem * base + s;
        out.push_back(static_cast<std::uint8_t>(cur / 2));
        rem = cur % 2;
    }
    while (rem && static_cast<int>(out.size()) < max_digits) {
        const int cur = rem * base;
        out.push_back(static_cast<std::uint8_t>(cur / 2));
        rem = cur % 2;
    }
    return DigitString{base, std::move(out)};
}

DigitString difference(const DigitString& hi, const DigitString& lo) {
    if (hi.base != lo.base) throw std::invalid_argument("mixed bases");
    const int base = hi.base;
    const std::size_t n = std::max(hi.size(), lo.size());
    std::vector<std::uint8_t> out(n);
    int borrow = 0;
    for (std::size_t i = n; i-- > 0;) {
        int v = (i < hi.size() ? hi.digits[i] : 0) - (i < lo.size() ? lo.digits[i] : 0) - borrow;
        borrow = v < 0;
        if (borrow) v += base;
        out[i] = static_cast<std::uint8_t>(v);
    }
    if (borrow) throw std::invalid_argument("difference: hi < lo");
    return DigitString{base, std::move(out)};
}

DimensionSelector DimensionSelector::make(int d_to, std::vector<int> mu) {
    const int d_from = static_cast<int>(mu.size());
    if (d_from < 1 || d_to <= d_from) throw std::invalid_argument("selector needs 1 <= d_from < d_to");
    for (int i = 0; i < d_from; ++i) {
        if (mu[i] < 0 || mu[i] >= d_to) throw std::invalid_argument("selector index out of range");
        if (i && mu[i] <= mu[i - 1]) throw std::invalid_argument("selector must be strictly increasing");
    }
    return DimensionSelector{d_from, d_to, std::move(mu)};
}

Point lift(const Point& p, const DimensionSelector& sel) {
    if (p.dim() != sel.d_from) throw std::invalid_argument("lift: dimension mismatch");
    std::vector<DigitString> coords(sel.d_to, DigitString{p.base, {}});
    for (int i = 0; i < sel.d_from; ++i) coords[sel.mu[i]] = p.coords[i];
    return Point::make(p.base, std::move(coords));
}

Point diaglift(const Point& p) {
    if (p.dim() < 1) throw std::invalid_argument("diaglift: empty point");
    std::vector<DigitString> coords = p.coords;
    coords.insert(coords.end(), p.coords.begin(), p.coords.end());
    return Point::make(p.base, std::move(coords));
}

}  // namespace sfc

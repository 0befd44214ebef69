#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfc {

/// Fractional part of a coordinate in [0,1) as base-b digits, most significant first.
struct DigitString {
    int base = 2;
    std::vector<std::uint8_t> digits;

    /// Validates base and digit range.
    static DigitString make(int base, std::vector<std::uint8_t> digits);
    /// Reads bare digits such as "0121".
    static DigitString from_digits(std::string_view text, int base);

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    std::string str() const;

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

struct Point {
    int base = 2;
    std::vector<DigitString> coords;

    static Point make(int base, std::vector<DigitString> coords);
    /// Builds a point from bare digit strings, e.g. {"01", "11"}.
    static Point from_digits(std::initializer_list<std::string_view> coords, int base);

    int dim() const { return static_cast<int>(coords.size()); }
    friend bool operator==(const Point&, const Point&) = default;
};

/// Removes the first digit; an exhausted string yields 0 and stays empty.
std::pair<int, DigitString> extract(const DigitString& s);

/// Non-owning cursor with the same semantics as extract(), used by comparators.
class DigitReader {
public:
    DigitReader() = default;
    explicit DigitReader(const DigitString& s) : data_(s.digits.data()), size_(s.digits.size()) {}

    int next() { return pos_ < size_ ? data_[pos_++] : 0; }
    bool exhausted() const { return pos_ >= size_; }

private:
    const std::uint8_t* data_ = nullptr;
    std::size_t size_ = 0;
    std::size_t pos_ = 0;
};

/// How coordinate text is read: decimal fractions, or digits already in the point's base.
enum class Notation { decimal, digits };

/// Parses "x0,x1,..." into a point in [0,1)^d. Decimals are truncated to `precision` digits.
/// Rejects values >= 1, negative values, and malformed text.
Point parse_point(std::string_view text, int base, int precision, Notation notation = Notation::decimal);

/// Renders in digit notation ("0.0121,0.2"); parse_point(render_point(p), ..., Notation::digits) == p.
std::string render_point(const Point& p);

/// A coordinate with sign and integer part, used by the zoom-out extensions.
struct Scalar {
    int base = 2;
    bool negative = false;
    std::vector<std::uint8_t> integer;   // most significant first, no leading zeros
    std::vector<std::uint8_t> fraction;

    bool is_zero() const;
    friend bool operator==(const Scalar&, const Scalar&) = default;
};

struct ExtendedPoint {
    int base = 2;
    std::vector<Scalar> coords;
    int dim() const { return static_cast<int>(coords.size()); }
};

Scalar parse_scalar(std::string_view text, int base, int precision, Notation notation = Notation::decimal);
ExtendedPoint parse_extended_point(std::string_view text, int base, int precision,
                                   Notation notation = Notation::decimal);
ExtendedPoint extend(const Point& p);

/// Divides both points by b^(levels*k) for the smallest k that brings every coordinate below 1.
/// Throws on negative coordinates.
std::pair<Point, Point> rescale_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, int levels = 2);

/// Numeric comparison of two fractions (shorter strings are zero-padded): -1, 0 or 1.
int compare_value(const DigitString& a, const DigitString& b);
/// (a + b) / 2, truncated after max_digits digits (exact in base 2 with one extra digit).
DigitString midpoint(const DigitString& a, const DigitString& b, int max_digits);
/// hi - lo; requires hi >= lo.
DigitString difference(const DigitString& hi, const DigitString& lo);

/// Strictly increasing injection mu from {0..d_from-1} into {0..d_to-1}.
struct DimensionSelector {
    int d_from = 0;
    int d_to = 0;
    std::vector<int> mu;

    static DimensionSelector make(int d_to, std::vector<int> mu);
};

/// Places p[i] at coordinate mu(i) and zero everywhere else.
Point lift(const Point& p, const DimensionSelector& sel);
/// (p | p): q[i] = p[i mod d].
Point diaglift(const Point& p);

}  // namespace sfc

#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "sfc/curvespec.hpp"

namespace sfc {

enum class TernaryFamily { peano, coil, halfcoil, meurthe };

std::string_view to_string(TernaryFamily f);

/// Locations follow the ternary reflected Gray code; m_i(r) = (digitsum(r) - r_i) mod 2.
CurveSpec make_ternary(TernaryFamily family, int d);

/// a(r) for the given family and rank.
Permutation ternary_permutation(TernaryFamily family, const BaseBNumber& r);

/// Streaming form of the specialized ternary comparator: yields the rank digit of p and q
/// for one coordinate at a time. Digits after the first divergence follow p's path.
class TernaryWalker {
public:
    TernaryWalker(TernaryFamily family, const Point& p, const Point& q)
        : TernaryWalker(family, Coords(p.coords), Coords(q.coords)) {}
    TernaryWalker(TernaryFamily family, Coords p, Coords q);

    std::pair<int, int> next();
    /// All digits consumed and positioned at a level boundary.
    bool exhausted() const { return pos_ == 0 && pr_.exhausted() && qr_.exhausted(); }

private:
    void end_level();

    TernaryFamily family_;
    int dim_;
    PointReader pr_, qr_;
    std::array<std::uint8_t, kMaxDim> perm_{}, alt_{}, rank_{};
    std::array<bool, kMaxDim> reflected_{};
    bool forward_ = true;
    bool direction_ = true;
    int pos_ = 0;
};

/// Specialized comparator for points in [0,1)^d; same verdicts as compare_generic on make_ternary.
bool compare_ternary(const Point& p, const Point& q, TernaryFamily family);
/// Non-negative coordinates: both points are divided by 9 until they lie in the unit cube.
bool compare_ternary_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, TernaryFamily family);
/// Arbitrary coordinates: x -> (x + 20) / 81 until every coordinate lies in [0,1).
bool compare_ternary_signed(const ExtendedPoint& p, const ExtendedPoint& q, TernaryFamily family);

/// The common zoom-out used by compare_ternary_signed, exposed for testing.
std::pair<Point, Point> zoom_signed(const ExtendedPoint& p, const ExtendedPoint& q);

}  // namespace sfc

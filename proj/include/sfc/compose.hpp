#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sfc/family.hpp"

namespace sfc {

/// 2D driver curves for composition: h2 (Hilbert) for base 2, h3 (Meander) for base 3.
enum class Driver { h2, h3 };

std::optional<Driver> parse_driver(std::string_view tag);
std::string_view to_string(Driver d);
int driver_base(Driver d);

/// The 2D harmonious Hilbert curve.
CurveSpec make_h2();
/// 3-regular 2D Meander curve with entrance (0,0) and exit (1,0). Its monotonicity along the
/// bottom edge and the ascending diagonal is checked here at depth 3; throws if that fails.
CurveSpec make_h3();
const CurveSpec& driver_spec(Driver d);

/// A curve usable as the inner curve of a composition: a family with its specialized
/// comparator, or any explicit table.
struct InnerCurve {
    std::optional<Family> family;
    const CurveSpec* spec = nullptr;

    static InnerCurve of(Family f) { return {f, nullptr}; }
    static InnerCurve of(const CurveSpec& s) { return {std::nullopt, &s}; }
    int base() const;
};

/// Resumable comparison of one point pair that yields one rank digit of each point per call.
/// Digits are exact up to and including the first position where the two differ.
class StreamingComparator {
public:
    virtual ~StreamingComparator() = default;
    virtual std::pair<int, int> next() = 0;
    /// Every digit of both points consumed, at a level boundary.
    virtual bool exhausted() const = 0;
};

/// The stream keeps copies of p and q.
std::unique_ptr<StreamingComparator> make_streaming_comparator(const InnerCurve& inner, const Point& p,
                                                               const Point& q);

/// Order along f = f' o h: the rank digits of the left halves and the right halves feed the
/// two coordinates of the driver.
bool compare_composed(const Point& p, const Point& q, const InnerCurve& inner, Driver outer);

/// Checks that reversing `inner` equals applying rho to it, at depths 1..max_depth.
bool verify_symmetry(const CurveSpec& inner, const Transform& rho, int max_depth = 3);
/// rho for the shipped symmetric families: mirror in axis 0 for Hilbert curves, mirror in every
/// axis for ternary curves. Meurthe has none, so this candidate fails verification.
Transform default_symmetry(Family f, int d);

/// Explicit table of f' o h_b for a symmetric inner curve; throws if rho does not verify.
CurveSpec derive_composed_spec(const CurveSpec& inner, const Transform& rho);

/// Axis-parallel box with per-axis bounds in [0,1).
struct Rectangle {
    std::vector<DigitString> min;
    std::vector<DigitString> max;
};

enum class RectMode { xy, cd };

/// Parses "min_0 ... min_(d-1) max_0 ... max_(d-1)" (whitespace separated).
Rectangle parse_rectangle(std::string_view line, int base, int precision, Notation notation = Notation::decimal);
/// xy: (mins, maxs); cd: (centers, extents). Centers keep one digit more than the inputs
/// (exact in base 2) but at least `precision` digits when base 3 midpoints do not terminate.
Point rect_to_point(const Rectangle& r, RectMode mode, int precision);

}  // namespace sfc

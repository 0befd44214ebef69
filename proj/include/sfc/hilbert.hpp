#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "sfc/curvespec.hpp"
#include "sfc/verify.hpp"

namespace sfc {

enum class BinaryFamily { butzmoore, harmonious };

std::string_view to_string(BinaryFamily f);

/// Standard Hilbert curve: binary reflected Gray code locations and the shared reflection rule.
CurveSpec make_standard_hilbert(BinaryFamily family, int d);

/// a^-1_0(r) computed from c(r): the last i with c_i = 1 gives i-1 (mod d); d-1 if there is none.
int hilbert_entry_axis(const BaseBNumber& location);
Permutation hilbert_permutation(BinaryFamily family, const BaseBNumber& r);

/// Harmonious comparator state machine (one coordinate digit per call), yielding rank digits.
class HarmoniousWalker {
public:
    HarmoniousWalker(const Point& p, const Point& q) : HarmoniousWalker(Coords(p.coords), Coords(q.coords)) {}
    HarmoniousWalker(Coords p, Coords q);
    std::pair<int, int> next();
    bool exhausted() const { return pos_ == 0 && pr_.exhausted() && qr_.exhausted(); }

private:
    int dim_;
    PointReader pr_, qr_;
    std::array<std::uint8_t, kMaxDim> perm_{}, alt_{}, rank_{};
    std::array<bool, kMaxDim> reflected_{};
    bool forward_ = true;
    int pos_ = 0;
};

/// Butz-Moore comparator state machine: the permutation is always a rotation, so only its
/// offset is tracked.
class ButzMooreWalker {
public:
    ButzMooreWalker(const Point& p, const Point& q) : ButzMooreWalker(Coords(p.coords), Coords(q.coords)) {}
    ButzMooreWalker(Coords p, Coords q);
    std::pair<int, int> next();
    bool exhausted() const { return pos_ == 0 && pr_.exhausted() && qr_.exhausted(); }

private:
    int dim_;
    PointReader pr_, qr_;
    std::array<bool, kMaxDim> reflected_{};
    bool forward_ = true;
    int rotation_ = 0;
    int i_ = 0;
    int i_minus_1_;
    int new_rotation_;
    int pos_ = 0;
};

/// Specialized comparator for points in [0,1)^d; same verdicts as compare_generic on
/// make_standard_hilbert.
bool compare_binary(const Point& p, const Point& q, BinaryFamily family);
/// Non-negative coordinates: both points are divided by 4 (harmonious) or 2^d (Butz-Moore, d > 2)
/// until they lie in the unit cube.
bool compare_binary_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, BinaryFamily family);

/// A front face of the 3D Butz-Moore curve whose visible order at depth 2 is not the
/// 2D Hilbert order. Throws if none is found.
ShowsReport butzmoore_inconsistency_witness();

}  // namespace sfc

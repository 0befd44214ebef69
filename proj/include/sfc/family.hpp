#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sfc/hilbert.hpp"
#include "sfc/ternary.hpp"

namespace sfc {

/// Every shipped curve family under one tag.
enum class Family { peano, coil, halfcoil, meurthe, butzmoore, harmonious };

inline constexpr Family kAllFamilies[] = {Family::peano,     Family::coil,      Family::halfcoil,
                                          Family::meurthe,   Family::butzmoore, Family::harmonious};

/// Accepts the CLI tags: peano, coil, half-coil, meurthe, butz-moore, harmonious.
std::optional<Family> parse_family(std::string_view tag);
std::string_view to_string(Family f);

bool is_ternary(Family f);
int family_base(Family f);
TernaryFamily ternary_family(Family f);
BinaryFamily binary_family(Family f);

CurveSpec make_spec(Family f, int d);

/// The specialized comparator of the family.
bool compare(const Point& p, const Point& q, Family f);
bool compare_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, Family f);
/// Ternary families only; binary families throw.
bool compare_signed(const ExtendedPoint& p, const ExtendedPoint& q, Family f);

}  // namespace sfc

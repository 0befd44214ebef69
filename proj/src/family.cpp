#include "sfc/family.hpp"

#include <stdexcept>

namespace sfc {

std::optional<Family> parse_family(std::string_view tag) {
    for (Family f : kAllFamilies)
        if (to_string(f) == tag) return f;
    return std::nullopt;
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::peano: return "peano";
        case Family::coil: return "coil";
        case Family::halfcoil: return "half-coil";
        case Family::meurthe: return "meurthe";
        case Family::butzmoore: return "butz-moore";
        case Family::harmonious: return "harmonious";
    }
    return "?";
}

bool is_ternary(Family f) { return f != Family::butzmoore && f != Family::harmonious; }

int family_base(Family f) { return is_ternary(f) ? 3 : 2; }

TernaryFamily ternary_family(Family f) {
    switch (f) {
        case Family::peano: return TernaryFamily::peano;
        case Family::coil: return TernaryFamily::coil;
        case Family::halfcoil: return TernaryFamily::halfcoil;
        case Family::meurthe: return TernaryFamily::meurthe;
        default: throw std::invalid_argument(std::string(to_string(f)) + " is not a ternary family");
    }
}

BinaryFamily binary_family(Family f) {
    if (f == Family::butzmoore) return BinaryFamily::butzmoore;
    if (f == Family::harmonious) return BinaryFamily::harmonious;
    throw std::invalid_argument(std::string(to_string(f)) + " is not a binary family");
}

CurveSpec make_spec(Family f, int d) {
    return is_ternary(f) ? make_ternary(ternary_family(f), d) : make_standard_hilbert(binary_family(f), d);
}

bool compare(const Point& p, const Point& q, Family f) {
    return is_ternary(f) ? compare_ternary(p, q, ternary_family(f)) : compare_binary(p, q, binary_family(f));
}

bool compare_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, Family f) {
    return is_ternary(f) ? compare_ternary_nonneg(p, q, ternary_family(f))
                         : compare_binary_nonneg(p, q, binary_family(f));
}

bool compare_signed(const ExtendedPoint& p, const ExtendedPoint& q, Family f) {
    if (!is_ternary(f)) throw std::invalid_argument("negative coordinates are not supported for Hilbert curves");
    return compare_ternary_signed(p, q, ternary_family(f));
}

}  // namespace sfc

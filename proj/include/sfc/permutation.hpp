#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sfc {

/// Axis permutation of a subregion transform.
///
/// forward()[i] is the axis of the unit-cube curve that is rotated onto axis i;
/// inverse()[i] is the axis that axis i of the unit-cube curve ends up on.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int d);
    static Permutation reversal(int d);
    static Permutation from_forward(std::vector<std::uint8_t> forward);
    static Permutation from_inverse(const std::vector<std::uint8_t>& inverse);

    /// Parses a digit string such as "43210" (digits, then a-z for axes >= 10).
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(forward_.size()); }
    int operator[](int i) const { return forward_[i]; }
    int inv(int i) const { return inverse_[i]; }
    const std::vector<std::uint8_t>& forward() const { return forward_; }
    const std::vector<std::uint8_t>& inverse() const { return inverse_; }
    Permutation inverted() const;

    std::string str() const;
    std::string inverse_str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> forward_;
    std::vector<std::uint8_t> inverse_;
};

/// Removes element i and renumbers the survivors so the result is again a permutation.
Permutation take_out(const Permutation& a, int i);

/// Renders axis indices as a digit string; 10..35 become a..z.
std::string axis_string(const std::vector<std::uint8_t>& axes);

}  // namespace sfc

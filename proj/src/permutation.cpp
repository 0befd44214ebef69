#include "sfc/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace sfc {

namespace {

char axis_char(int a) {
    return a < 10 ? static_cast<char>('0' + a) : static_cast<char>('a' + a - 10);
}

int axis_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    throw std::invalid_argument(std::string("bad permutation digit '") + ch + "'");
}

}  // namespace

Permutation Permutation::identity(int d) {
    std::vector<std::uint8_t> f(d);
    std::iota(f.begin(), f.end(), 0);
    return from_forward(std::move(f));
}

Permutation Permutation::reversal(int d) {
    std::vector<std::uint8_t> f(d);
    for (int i = 0; i < d; ++i) f[i] = static_cast<std::uint8_t>(d - 1 - i);
    return from_forward(std::move(f));
}

Permutation Permutation::from_forward(std::vector<std::uint8_t> forward) {
    const int d = static_cast<int>(forward.size());
    std::vector<std::uint8_t> inverse(d, 0xff);
    for (int i = 0; i < d; ++i) {
        if (forward[i] >= d || inverse[forward[i]] != 0xff)
            throw std::invalid_argument("not a permutation: " + axis_string(forward));
        inverse[forward[i]] = static_cast<std::uint8_t>(i);
    }
    Permutation p;
    p.forward_ = std::move(forward);
    p.inverse_ = std::move(inverse);
    return p;
}

Permutation Permutation::from_inverse(const std::vector<std::uint8_t>& inverse) {
    return from_forward(inverse).inverted();
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<std::uint8_t> f;
    f.reserve(text.size());
    for (char ch : text) f.push_back(static_cast<std::uint8_t>(axis_value(ch)));
    return from_forward(std::move(f));
}

Permutation Permutation::inverted() const {
    Permutation p;
    p.forward_ = inverse_;
    p.inverse_ = forward_;
    return p;
}

std::string Permutation::str() const { return axis_string(forward_); }
std::string Permutation::inverse_str() const { return axis_string(inverse_); }

Permutation take_out(const Permutation& a, int i) {
    if (i < 0 || i >= a.size()) throw std::out_of_range("take_out: index out of range");
    const int removed = a[i];
    std::vector<std::uint8_t> out;
    out.reserve(a.size() - 1);
    for (int j = 0; j < a.size(); ++j) {
        if (j == i) continue;
        out.push_back(static_cast<std::uint8_t>(a[j] > removed ? a[j] - 1 : a[j]));
    }
    return Permutation::from_forward(std::move(out));
}

std::string axis_string(const std::vector<std::uint8_t>& axes) {
    std::string s;
    s.reserve(axes.size());
    for (auto a : axes) s.push_back(axis_char(a));
    return s;
}

}  // namespace sfc

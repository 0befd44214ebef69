#include "sfc/ternary.hpp"

#include <stdexcept>

namespace sfc {

std::string_view to_string(TernaryFamily f) {
    switch (f) {
        case TernaryFamily::peano: return "peano";
        case TernaryFamily::coil: return "coil";
        case TernaryFamily::halfcoil: return "half-coil";
        case TernaryFamily::meurthe: return "meurthe";
    }
    return "?";
}

Permutation ternary_permutation(TernaryFamily family, const BaseBNumber& r) {
    const int d = r.width();
    switch (family) {
        case TernaryFamily::peano: return Permutation::identity(d);
        case TernaryFamily::coil: return Permutation::reversal(d);
        case TernaryFamily::halfcoil:
            return r.digit_sum() % 2 ? Permutation::identity(d) : Permutation::reversal(d);
        case TernaryFamily::meurthe: {
            // Inverse: indices with r_i in {0,1} first in reversed order, then the 2s in order.
            std::vector<std::uint8_t> inv;
            for (int i = d; i-- > 0;)
                if (r.digits[i] != 2) inv.push_back(static_cast<std::uint8_t>(i));
            for (int i = 0; i < d; ++i)
                if (r.digits[i] == 2) inv.push_back(static_cast<std::uint8_t>(i));
            return Permutation::from_inverse(inv);
        }
    }
    throw std::invalid_argument("unknown ternary family");
}

CurveSpec make_ternary(TernaryFamily family, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) n *= 3;
    std::vector<CurveRow> rows;
    rows.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        const BaseBNumber r = BaseBNumber::from_int(v, 3, d);
        const int sum = r.digit_sum();
        std::vector<std::uint8_t> m(d);
        for (int i = 0; i < d; ++i) m[i] = static_cast<std::uint8_t>((sum - r.digits[i]) % 2);
        rows.push_back({rgc_encode(r), ternary_permutation(family, r), std::move(m)});
    }
    return CurveSpec(d, 3, std::move(rows), std::string(to_string(family)));
}

TernaryWalker::TernaryWalker(TernaryFamily family, Coords p, Coords q)
    : family_(family), dim_(static_cast<int>(p.size())), pr_(p), qr_(q) {
    check_coords(p, dim_, 3);
    check_coords(q, dim_, 3);
    if (dim_ > kMaxDim) throw std::invalid_argument("dimension too large");
    for (int i = 0; i < dim_; ++i) {
        perm_[i] = static_cast<std::uint8_t>(i);
        alt_[i] = static_cast<std::uint8_t>(dim_ - 1 - i);  // coil and half-coil keep the reversal here
    }
}

std::pair<int, int> TernaryWalker::next() {
    if (pos_ == 0) direction_ = forward_;
    const int src = perm_[pos_];
    int pd = pr_.next(src);
    int qd = qr_.next(src);
    // Reflected and Forward may both be off by one flip; only their agreement matters.
    if (reflected_[src] == forward_) {
        pd = 2 - pd;
        qd = 2 - qd;
    }
    rank_[pos_] = static_cast<std::uint8_t>(pd);
    if (pd & 1) {
        forward_ = !forward_;
        reflected_[src] = !reflected_[src];
    }
    if (++pos_ == dim_) {
        end_level();
        pos_ = 0;
    }
    return {pd, qd};
}

void TernaryWalker::end_level() {
    switch (family_) {
        case TernaryFamily::peano: break;
        case TernaryFamily::coil: std::swap(perm_, alt_); break;
        case TernaryFamily::halfcoil:
            if (forward_ == direction_) std::swap(perm_, alt_);  // even rank: reversal
            break;
        case TernaryFamily::meurthe: {
            int twos = 0;
            for (int i = 0; i < dim_; ++i) twos += rank_[i] == 2;
            int next_two = dim_ - twos;
            int next_non_two = next_two - 1;
            for (int i = 0; i < dim_; ++i) {
                if (rank_[i] == 2)
                    alt_[next_two++] = perm_[i];
                else
                    alt_[next_non_two--] = perm_[i];
            }
            std::swap(perm_, alt_);
            break;
        }
    }
}

bool compare_ternary(const Point& p, const Point& q, TernaryFamily family) {
    if (p.dim() != q.dim()) throw std::invalid_argument("points differ in dimension");
    TernaryWalker w(family, p, q);
    for (;;) {
        const auto [pd, qd] = w.next();
        if (pd != qd) return pd < qd;
        if (w.exhausted()) return false;
    }
}

bool compare_ternary_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, TernaryFamily family) {
    if (p.base != 3 || q.base != 3) throw std::invalid_argument("ternary curves need base-3 points");
    const auto [ps, qs] = rescale_nonneg(p, q);
    return compare_ternary(ps, qs, family);
}

namespace {

// s_k(x) = 0.(0202)^k + x / 81^k on a fixed number of fraction digits;
// returns false when the result leaves [0,1).
bool zoom_coordinate(const Scalar& x, int k, std::vector<std::uint8_t>& out) {
    const std::size_t shift = 4 * static_cast<std::size_t>(k);
    if (x.integer.size() > shift) return false;
    const std::size_t len = shift + x.fraction.size();
    std::vector<std::uint8_t> v(shift - x.integer.size(), 0);
    v.insert(v.end(), x.integer.begin(), x.integer.end());
    v.insert(v.end(), x.fraction.begin(), x.fraction.end());
    out.assign(len, 0);
    for (std::size_t j = 0; j < shift; ++j) out[j] = (j % 2) ? 2 : 0;
    int carry = 0;
    for (std::size_t j = len; j-- > 0;) {
        int t = out[j] + (x.negative ? -(v[j] + carry) : v[j] + carry);
        carry = 0;
        if (t < 0) t += 3, carry = 1;
        if (t > 2) t -= 3, carry = 1;
        out[j] = static_cast<std::uint8_t>(t);
    }
    return carry == 0;
}

}  // namespace

std::pair<Point, Point> zoom_signed(const ExtendedPoint& p, const ExtendedPoint& q) {
    if (p.base != 3 || q.base != 3) throw std::invalid_argument("signed zoom needs base-3 points");
    if (p.dim() != q.dim() || p.dim() < 1) throw std::invalid_argument("points differ in dimension");
    constexpr int kMaxSteps = 64;
    for (int k = 0; k <= kMaxSteps; ++k) {
        std::vector<DigitString> pc, qc;
        bool fits = true;
        for (auto [src, dst] : {std::pair{&p, &pc}, std::pair{&q, &qc}}) {
            for (const auto& x : src->coords) {
                std::vector<std::uint8_t> digits;
                if (!zoom_coordinate(x, k, digits)) {
                    fits = false;
                    break;
                }
                dst->push_back(DigitString{3, std::move(digits)});
            }
            if (!fits) break;
        }
        if (fits) return {Point::make(3, std::move(pc)), Point::make(3, std::move(qc))};
    }
    throw std::invalid_argument("coordinates too large to zoom out");
}

bool compare_ternary_signed(const ExtendedPoint& p, const ExtendedPoint& q, TernaryFamily family) {
    const auto [ps, qs] = zoom_signed(p, q);
    return compare_ternary(ps, qs, family);
}

}  // namespace sfc

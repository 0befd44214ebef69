#include "sfc/hilbert.hpp"

#include <stdexcept>

namespace sfc {

std::string_view to_string(BinaryFamily f) {
    return f == BinaryFamily::butzmoore ? "butz-moore" : "harmonious";
}

int hilbert_entry_axis(const BaseBNumber& location) {
    const int d = location.width();
    int axis = d - 1;
    for (int i = 0; i < d; ++i)
        if (location.digits[i]) axis = (i + d - 1) % d;
    return axis;
}

Permutation hilbert_permutation(BinaryFamily family, const BaseBNumber& r) {
    const int d = r.width();
    std::vector<std::uint8_t> inv;
    inv.reserve(d);
    if (family == BinaryFamily::butzmoore) {
        const int a0 = hilbert_entry_axis(rgc_encode(r));
        for (int j = 0; j < d; ++j) inv.push_back(static_cast<std::uint8_t>((a0 + j) % d));
    } else {
        // Indices whose digit differs from the last digit come first, reversed; then the rest, reversed.
        const int last = r.digits[d - 1];
        for (int i = d; i-- > 0;)
            if (r.digits[i] != last) inv.push_back(static_cast<std::uint8_t>(i));
        for (int i = d; i-- > 0;)
            if (r.digits[i] == last) inv.push_back(static_cast<std::uint8_t>(i));
    }
    return Permutation::from_inverse(inv);
}

CurveSpec make_standard_hilbert(BinaryFamily family, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (d > 26) throw std::invalid_argument("dimension too large for a table");
    const std::uint64_t n = std::uint64_t{1} << d;
    std::vector<CurveRow> rows;
    rows.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        const BaseBNumber r = BaseBNumber::from_int(v, 2, d);
        const BaseBNumber c = rgc_encode(r);
        // m_i = c_i, then fix the last axis, and the entry axis when c has an even number of ones.
        std::vector<std::uint8_t> m = c.digits;
        m[d - 1] ^= 1;
        if (c.digit_sum() % 2 == 0) m[hilbert_entry_axis(c)] ^= 1;
        rows.push_back({c, hilbert_permutation(family, r), std::move(m)});
    }
    return CurveSpec(d, 2, std::move(rows), std::string(to_string(family)));
}

HarmoniousWalker::HarmoniousWalker(Coords p, Coords q) : dim_(static_cast<int>(p.size())), pr_(p), qr_(q) {
    check_coords(p, dim_, 2);
    check_coords(q, dim_, 2);
    for (int i = 0; i < dim_; ++i) perm_[i] = static_cast<std::uint8_t>(i);
}

std::pair<int, int> HarmoniousWalker::next() {
    const int src = perm_[pos_];
    int pd = pr_.next(src);
    int qd = qr_.next(src);
    if (reflected_[src]) {
        pd = 1 - pd;
        qd = 1 - qd;
    }
    const std::pair<int, int> out = forward_ ? std::pair{pd, qd} : std::pair{1 - pd, 1 - qd};
    rank_[pos_] = static_cast<std::uint8_t>(out.first);
    if (pd == 1) {
        forward_ = !forward_;
        reflected_[src] = !reflected_[src];
    }
    if (++pos_ < dim_) return out;

    pos_ = 0;
    int ones = 0;
    for (int i = 0; i < dim_; ++i) ones += rank_[i];
    std::array<int, 2> next{};
    if (rank_[dim_ - 1] == 0) {
        next[1] = 0;
        next[0] = ones;
    } else {
        next[0] = 0;
        next[1] = dim_ - ones;
    }
    for (int i = dim_; i-- > 0;) alt_[next[rank_[i]]++] = perm_[i];
    // Forward is not reset between levels, so the entry-axis flip is applied unconditionally.
    reflected_[perm_[dim_ - 1]] = !reflected_[perm_[dim_ - 1]];
    reflected_[alt_[0]] = !reflected_[alt_[0]];
    std::swap(perm_, alt_);
    return out;
}

ButzMooreWalker::ButzMooreWalker(Coords p, Coords q)
    : dim_(static_cast<int>(p.size())), pr_(p), qr_(q), i_minus_1_(dim_ - 1), new_rotation_(dim_ - 1) {
    check_coords(p, dim_, 2);
    check_coords(q, dim_, 2);
}

std::pair<int, int> ButzMooreWalker::next() {
    int pd = pr_.next(i_);
    int qd = qr_.next(i_);
    if (reflected_[i_]) {
        pd = 1 - pd;
        qd = 1 - qd;
    }
    const std::pair<int, int> out = forward_ ? std::pair{pd, qd} : std::pair{1 - pd, 1 - qd};
    if (pd == 1) {
        forward_ = !forward_;
        reflected_[i_] = !reflected_[i_];
        new_rotation_ = i_minus_1_;
    }
    i_minus_1_ = i_;
    i_ = (i_ + 1) % dim_;
    if (++pos_ < dim_) return out;

    pos_ = 0;
    reflected_[i_minus_1_] = !reflected_[i_minus_1_];
    reflected_[new_rotation_] = !reflected_[new_rotation_];
    rotation_ = new_rotation_;
    i_ = rotation_;
    i_minus_1_ = (i_ + dim_ - 1) % dim_;
    new_rotation_ = i_minus_1_;
    return out;
}

namespace {

template <class Walker>
bool run(Walker w) {
    for (;;) {
        const auto [pd, qd] = w.next();
        if (pd != qd) return pd < qd;
        if (w.exhausted()) return false;
    }
}

}  // namespace

bool compare_binary(const Point& p, const Point& q, BinaryFamily family) {
    if (p.dim() != q.dim()) throw std::invalid_argument("points differ in dimension");
    if (family == BinaryFamily::butzmoore) return run(ButzMooreWalker(p, q));
    return run(HarmoniousWalker(p, q));
}

bool compare_binary_nonneg(const ExtendedPoint& p, const ExtendedPoint& q, BinaryFamily family) {
    if (p.base != 2 || q.base != 2) throw std::invalid_argument("binary curves need base-2 points");
    if (p.dim() != q.dim()) throw std::invalid_argument("points differ in dimension");
    // One zoom step must land the old cube in an untransformed corner subregion: the first
    // subregion repeated as often as the order of its rotation (2 for harmonious, d for Butz-Moore).
    const int d = p.dim();
    const int levels = family == BinaryFamily::butzmoore && d > 2 ? d : 2;
    const auto [ps, qs] = rescale_nonneg(p, q, levels);
    return compare_binary(ps, qs, family);
}

ShowsReport butzmoore_inconsistency_witness() {
    const CurveSpec bm3 = make_standard_hilbert(BinaryFamily::butzmoore, 3);
    const CurveSpec h2 = make_standard_hilbert(BinaryFamily::harmonious, 2);
    for (int axis = 0; axis < 3; ++axis) {
        ShowsReport r = check_shows(bm3, h2, Face{axis, 0}, 2);
        if (!r.pass) return r;
    }
    throw std::logic_error("no Butz-Moore inconsistency found at depth 2");
}

}  // namespace sfc

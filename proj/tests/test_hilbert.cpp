#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sfc/family.hpp"
#include "support.hpp"

using namespace sfc;

namespace {

constexpr BinaryFamily kBinary[] = {BinaryFamily::butzmoore, BinaryFamily::harmonious};

// Harmonious forward permutation by its counting rule.
std::vector<std::uint8_t> harmonious_direct(const BaseBNumber& r) {
    const int d = r.width();
    const int last = r.digits[d - 1];
    std::vector<std::uint8_t> a(d);
    for (int i = 0; i < d; ++i) {
        int n = 0;
        if (r.digits[i] != last) {
            for (int j = i + 1; j < d; ++j) n += r.digits[j] != last;
            a[i] = static_cast<std::uint8_t>(n);
        } else {
            for (int j = 0; j < i; ++j) n += r.digits[j] == last;
            a[i] = static_cast<std::uint8_t>(d - 1 - n);
        }
    }
    return a;
}

// a^-1_0(r) from the neighbours of r along the Gray code.
int entry_axis_by_neighbours(const std::vector<oracle::Digits>& c, std::size_t r) {
    const int d = static_cast<int>(c[0].size());
    if (r == 0 || r + 1 == c.size()) return d - 1;
    const auto& other = r % 2 ? c[r + 1] : c[r - 1];
    for (int i = 0; i < d; ++i)
        if (c[r][i] != other[i]) return i;
    return -1;
}

Point drop(const Point& p, int i) {
    std::vector<DigitString> c = p.coords;
    c.erase(c.begin() + i);
    return Point::make(p.base, std::move(c));
}

}  // namespace

TEST_CASE("standard Hilbert tables follow the defining rules") {
    for (BinaryFamily f : kBinary) {
        for (int d = 2; d <= 7; ++d) {
            const CurveSpec spec = make_standard_hilbert(f, d);
            const auto c = oracle::rgc(2, d);
            for (std::uint32_t r = 0; r < spec.size(); ++r) {
                const auto& row = spec.row(r);
                CHECK(std::vector<int>(row.location.digits.begin(), row.location.digits.end()) == c[r]);
                CHECK(row.perm.inv(0) == entry_axis_by_neighbours(c, r));
                CHECK(hilbert_entry_axis(row.location) == row.perm.inv(0));
                for (int i = 0; i < d; ++i) {
                    const int want = r == 0 ? c[0][i] : i == d - 1 ? 1 - c[r][i] : c[r - 1][i];
                    CHECK(row.refl[i] == want);
                }
                const BaseBNumber rank = BaseBNumber::from_int(r, 2, d);
                if (f == BinaryFamily::harmonious) {
                    CHECK(row.perm.forward() == harmonious_direct(rank));
                } else {
                    for (int j = 0; j < d; ++j) CHECK(row.perm.inv(j) == (row.perm.inv(0) + j) % d);
                }
            }
        }
    }
}

TEST_CASE("compare_binary agrees with the generic comparator on every cell pair") {
    std::mt19937 rng(71);
    for (BinaryFamily f : kBinary) {
        for (int d = 1; d <= 4; ++d) {
            const CurveSpec spec = make_standard_hilbert(f, d);
            for (int depth = 1; depth <= 3; ++depth) {
                if (d * depth > 12) continue;
                auto less = [&](const Point& p, const Point& q) { return compare_binary(p, q, f); };
                const auto res = oracle::check_equivalence(spec, depth, less, rng);
                INFO(to_string(f), " d=", d, " depth=", depth);
                CHECK(res.mismatches == 0);
            }
        }
    }
}

TEST_CASE("compare_binary agrees with compare_generic on random points up to d=9") {
    std::mt19937 rng(73);
    for (BinaryFamily f : kBinary) {
        for (int d = 1; d <= 9; ++d) {
            const CurveSpec spec = make_standard_hilbert(f, d);
            for (int t = 0; t < 300; ++t) {
                const Point p = gen::point(rng, 2, d, 8), q = gen::point(rng, 2, d, 8);
                CHECK(compare_binary(p, q, f) == compare_generic(p, q, spec));
            }
        }
    }
}

TEST_CASE("walker rank digits spell rank_path") {
    std::mt19937 rng(79);
    for (int d : {2, 3, 5}) {
        const CurveSpec hh = make_standard_hilbert(BinaryFamily::harmonious, d);
        const CurveSpec bm = make_standard_hilbert(BinaryFamily::butzmoore, d);
        for (int t = 0; t < 100; ++t) {
            const Point p = gen::point(rng, 2, d, 5);
            HarmoniousWalker hw(p, p);
            ButzMooreWalker bw(p, p);
            const CellPath hp = rank_path(p, hh, 5), bp = rank_path(p, bm, 5);
            for (int level = 0; level < 5; ++level) {
                const BaseBNumber hd = BaseBNumber::from_int(hp[level], 2, d);
                const BaseBNumber bd = BaseBNumber::from_int(bp[level], 2, d);
                for (int i = 0; i < d; ++i) {
                    CHECK(hw.next().first == hd.digits[i]);
                    CHECK(bw.next().first == bd.digits[i]);
                }
            }
            CHECK(hw.exhausted());
            CHECK(bw.exhausted());
        }
    }
}

TEST_CASE("harmonious curves show the lower-dimensional curve on front hyperplanes") {
    std::mt19937 rng(83);
    for (int t = 0; t < 1500; ++t) {
        const int d_to = 2 + t % 6, d_from = 1 + static_cast<int>(rng() % (d_to - 1));
        std::vector<int> axes(d_to);
        for (int i = 0; i < d_to; ++i) axes[i] = i;
        std::shuffle(axes.begin(), axes.end(), rng);
        axes.resize(d_from);
        std::sort(axes.begin(), axes.end());
        const auto sel = DimensionSelector::make(d_to, axes);
        const Point a = gen::point(rng, 2, d_from, 6), b = gen::point(rng, 2, d_from, 6);
        CHECK(compare_binary(lift(a, sel), lift(b, sel), BinaryFamily::harmonious) ==
              compare_binary(a, b, BinaryFamily::harmonious));
    }
}

TEST_CASE("Butz-Moore breaks the hyperplane law in three dimensions") {
    std::mt19937 rng(89);
    int violations = 0;
    for (int t = 0; t < 2000; ++t) {
        Point p = gen::point(rng, 2, 3, 4), q = gen::point(rng, 2, 3, 4);
        const int i = t % 3;
        p.coords[i] = q.coords[i] = DigitString{2, {}};
        violations += compare_binary(p, q, BinaryFamily::butzmoore) !=
                      compare_binary(drop(p, i), drop(q, i), BinaryFamily::butzmoore);
    }
    CHECK(violations > 0);
}

TEST_CASE("the Butz-Moore witness is a concrete depth-2 disagreement") {
    const ShowsReport r = butzmoore_inconsistency_witness();
    CHECK_FALSE(r.pass);
    CHECK(r.depth == 2);
    CHECK(r.expected != r.actual);
    CHECK(r.witness().find("depth 2") != std::string::npos);
}

TEST_CASE("non-negative extension keeps unit-cube verdicts and is transitive") {
    std::mt19937 rng(97);
    for (BinaryFamily f : kBinary) {
        for (int d = 1; d <= 5; ++d) {
            for (int t = 0; t < 200; ++t) {
                const Point p = gen::point(rng, 2, d, 6), q = gen::point(rng, 2, d, 6);
                CHECK(compare_binary_nonneg(extend(p), extend(q), f) == compare_binary(p, q, f));
                // Mixing one point inside the unit cube with points far outside must stay consistent.
                const ExtendedPoint a = extend(p);
                const ExtendedPoint b = gen::extended_point(rng, 2, d, 7, 4, false);
                const ExtendedPoint c = gen::extended_point(rng, 2, d, 3, 4, false);
                auto lt = [&](const ExtendedPoint& x, const ExtendedPoint& y) { return compare_binary_nonneg(x, y, f); };
                CHECK_FALSE((lt(a, b) && lt(b, a)));
                if (lt(a, b) && lt(b, c)) CHECK(lt(a, c));
                if (lt(b, a) && lt(a, c)) CHECK(lt(b, c));
                if (lt(c, b) && lt(b, a)) CHECK(lt(c, a));
            }
        }
        const ExtendedPoint origin = parse_extended_point("0,0,0", 2, 4);
        CHECK(compare_binary_nonneg(origin, parse_extended_point("7,0.5,3", 2, 4), f));
    }
}

TEST_CASE("one extra zoom-out step never changes a non-negative verdict") {
    std::mt19937 rng(101);
    for (BinaryFamily f : kBinary) {
        for (int d = 2; d <= 5; ++d) {
            const int levels = f == BinaryFamily::butzmoore && d > 2 ? d : 2;
            for (int t = 0; t < 200; ++t) {
                const Point p = gen::point(rng, 2, d, 6), q = gen::point(rng, 2, d, 6);
                // Dividing by 2^levels lands the unit cube in an untransformed corner subregion.
                Point ps = p, qs = q;
                for (auto* pt : {&ps, &qs})
                    for (auto& c : pt->coords) c.digits.insert(c.digits.begin(), levels, 0);
                CHECK(compare_binary(ps, qs, f) == compare_binary(p, q, f));
            }
        }
    }
}

TEST_CASE("one non-negative rescale for a point outside the unit square") {
    const ExtendedPoint p = parse_extended_point("1.5,0.5", 2, 4), q = parse_extended_point("0.5,1.5", 2, 4);
    const Point ps = parse_point("0.375,0.125", 2, 6), qs = parse_point("0.125,0.375", 2, 6);
    for (BinaryFamily f : kBinary) CHECK(compare_binary_nonneg(p, q, f) == compare_binary(ps, qs, f));
}

TEST_CASE("the non-negative extension is a vertex-continuous curve beyond the unit cube") {
    // Half-cells of [0,8)^d sorted by the extended comparator must form a chain of touching cells.
    for (BinaryFamily f : kBinary) {
        for (int d = 2; d <= 3; ++d) {
            const auto cells = oracle::all_cells(d, 2, 4);
            struct Item {
                std::vector<std::int32_t> cell;
                ExtendedPoint centre;
            };
            std::vector<Item> items;
            for (const auto& c : cells) {
                ExtendedPoint e{2, {}};
                for (auto v : c) {
                    // v/2 + 1/4: three integer bits, then the fraction bits v&1 and 1.
                    Scalar s{2, false, {}, {static_cast<std::uint8_t>(v & 1), 1}};
                    for (int bit = 2; bit >= 0; --bit) s.integer.push_back(static_cast<std::uint8_t>((v >> (bit + 1)) & 1));
                    while (!s.integer.empty() && s.integer.front() == 0) s.integer.erase(s.integer.begin());
                    e.coords.push_back(std::move(s));
                }
                items.push_back({c, std::move(e)});
            }
            std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
                return compare_binary_nonneg(a.centre, b.centre, f);
            });
            int gaps = 0;
            for (std::size_t k = 1; k < items.size(); ++k)
                for (int i = 0; i < d; ++i) gaps += std::abs(items[k].cell[i] - items[k - 1].cell[i]) > 1;
            INFO(to_string(f), " d=", d);
            CHECK(gaps == 0);
        }
    }
}

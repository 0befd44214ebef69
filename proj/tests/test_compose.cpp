#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "sfc/compose.hpp"
#include "sfc/verify.hpp"
#include "support.hpp"

using namespace sfc;

namespace {

std::string golden(const std::string& name) { return oracle::read_file(std::string(SFC_GOLDEN_DIR) + "/" + name); }

// (a|0): a followed by as many zero coordinates.
Point halffix(const Point& a) {
    std::vector<DigitString> c = a.coords;
    for (int i = 0; i < a.dim(); ++i) c.push_back(DigitString{a.base, {}});
    return Point::make(a.base, std::move(c));
}

Driver driver_for(Family f) { return family_base(f) == 2 ? Driver::h2 : Driver::h3; }

// All eight rotations and reflections of the square.
std::vector<Transform> square_symmetries() {
    std::vector<Transform> out;
    for (const char* p : {"01", "10"})
        for (std::uint8_t m = 0; m < 4; ++m)
            out.push_back({Permutation::parse(p), {static_cast<std::uint8_t>(m & 1), static_cast<std::uint8_t>(m >> 1)}});
    return out;
}

}  // namespace

TEST_CASE("golden table of h2 composed with itself") {
    const CurveSpec h2 = make_h2();
    const CurveSpec spec = derive_composed_spec(h2, default_symmetry(Family::harmonious, 2));
    CHECK(spec.size() == 16);
    // The golden table has no inverse column.
    CHECK(oracle::without_column(format_tsv(emit_table(spec)), "inverse") == golden("composed_h2_h2.tsv"));
    const auto rows = emit_table(spec);
    CHECK(rows[15].location == "1000");
    CHECK(rows[15].reflections == "1100");
    CHECK(rows[15].exit == "1/2(2,0,0,0)");
}

TEST_CASE("h2 is the harmonious square and visits the quadrants in the classic order") {
    const CurveSpec h2 = make_h2();
    CHECK(format_tsv(emit_table(h2)) == format_tsv(emit_table(make_spec(Family::harmonious, 2))));
    const CellOrder order = expand_order(h2, 1);
    const std::vector<std::vector<std::int32_t>> want{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(std::vector<std::int32_t>(order.cell(k).begin(), order.cell(k).end()) == want[k]);
}

TEST_CASE("h3 matches its frozen table and runs from (0,0) to (1,0)") {
    const CurveSpec h3 = make_h3();
    CHECK(format_tsv(emit_table(h3)) == golden("h3.tsv"));
    const Gates g = gates(h3);
    CHECK(g.entrance == RationalPoint{Rational::make(0, 1), Rational::make(0, 1)});
    CHECK(g.exit == RationalPoint{Rational::make(1, 1), Rational::make(0, 1)});
}

TEST_CASE("driver monotonicity") {
    const CurveSpec h2 = make_h2(), h3 = make_h3();
    const std::pair<Corner, Corner> h2_segments[] = {
        {{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}};
    for (const auto& [from, to] : h2_segments) {
        const auto r = check_monotone(h2, from, to, 4);
        INFO(r.witness());
        CHECK(r.pass);
    }
    for (const auto& [from, to] : {std::pair<Corner, Corner>{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}}) {
        const auto r = check_monotone(h3, from, to, 3);
        INFO(r.witness());
        CHECK(r.pass);
    }
    CHECK(check_vertex_continuity(h3, 3).pass);
}

TEST_CASE("symmetry witnesses") {
    for (Family f : {Family::peano, Family::coil, Family::halfcoil, Family::butzmoore, Family::harmonious})
        for (int d = 1; d <= 3; ++d) {
            INFO(to_string(f), " d=", d);
            CHECK(verify_symmetry(make_spec(f, d), default_symmetry(f, d)));
        }
    CHECK_FALSE(verify_symmetry(make_spec(Family::meurthe, 3), default_symmetry(Family::meurthe, 3)));
    CHECK_THROWS_AS(derive_composed_spec(make_spec(Family::meurthe, 3), default_symmetry(Family::meurthe, 3)),
                    std::invalid_argument);
    // No rotation or reflection of the square reverses h3.
    for (const Transform& rho : square_symmetries()) CHECK_FALSE(verify_symmetry(make_h3(), rho));
}

TEST_CASE("derived composed tables are continuous") {
    for (Family f : {Family::harmonious, Family::peano, Family::coil, Family::halfcoil}) {
        for (int dp = 1; dp <= 2; ++dp) {
            const CurveSpec spec = derive_composed_spec(make_spec(f, dp), default_symmetry(f, dp));
            const int depth = spec.base() == 3 && dp == 2 ? 2 : 3;
            const auto r = check_vertex_continuity(spec, depth);
            INFO(to_string(f), " d'=", dp, " ", r.witness());
            CHECK(r.pass);
        }
    }
}

TEST_CASE("compare_composed agrees with the derived table on cell pairs") {
    std::mt19937 rng(131);
    for (Family f : {Family::harmonious, Family::butzmoore, Family::peano, Family::coil, Family::halfcoil}) {
        for (int dp = 1; dp <= 2; ++dp) {
            const CurveSpec spec = derive_composed_spec(make_spec(f, dp), default_symmetry(f, dp));
            const auto inner = InnerCurve::of(f);
            auto less = [&](const Point& p, const Point& q) { return compare_composed(p, q, inner, driver_for(f)); };
            for (int depth = 1; depth <= 2; ++depth) {
                // Larger grids run in the acceptance binary.
                if (oracle::ipow(static_cast<int>(spec.size()), depth) > 1024) continue;
                const auto res = oracle::check_equivalence(spec, depth, less, rng);
                INFO(to_string(f), " d'=", dp, " depth=", depth);
                CHECK(res.mismatches == 0);
            }
        }
    }
}

TEST_CASE("explicit inner tables drive the same composed order") {
    std::mt19937 rng(137);
    const CurveSpec inner = make_spec(Family::coil, 2);
    for (int t = 0; t < 300; ++t) {
        const Point p = gen::point(rng, 3, 4, 5), q = gen::point(rng, 3, 4, 5);
        CHECK(compare_composed(p, q, InnerCurve::of(inner), Driver::h3) ==
              compare_composed(p, q, InnerCurve::of(Family::coil), Driver::h3));
    }
}

TEST_CASE("halffix and diagonal laws") {
    std::mt19937 rng(139);
    struct Case {
        Family f;
        int dp;
    };
    std::vector<Case> cases;
    for (int dp = 1; dp <= 3; ++dp) cases.push_back({Family::harmonious, dp}), cases.push_back({Family::butzmoore, dp});
    for (Family f : {Family::peano, Family::coil, Family::halfcoil, Family::meurthe})
        for (int dp = 1; dp <= 2; ++dp) cases.push_back({f, dp});
    for (const auto& [f, dp] : cases) {
        const int b = family_base(f);
        int violations = 0;
        for (int t = 0; t < 200; ++t) {
            const Point a = gen::point(rng, b, dp, 6), c = gen::point(rng, b, dp, 6);
            const bool want = compare(a, c, f);
            violations += compare_composed(halffix(a), halffix(c), InnerCurve::of(f), driver_for(f)) != want;
            violations += compare_composed(diaglift(a), diaglift(c), InnerCurve::of(f), driver_for(f)) != want;
        }
        INFO(to_string(f), " d'=", dp);
        CHECK(violations == 0);
    }
}

TEST_CASE("streamed rank digits match rank_path up to the first divergence") {
    std::mt19937 rng(149);
    for (Family f : kAllFamilies) {
        const int d = 3, levels = 5, b = family_base(f);
        const CurveSpec spec = make_spec(f, d);
        for (int t = 0; t < 100; ++t) {
            const Point p = gen::point(rng, b, d, levels);
            Point q = gen::point(rng, b, d, levels);
            if (t % 2) q.coords[0] = p.coords[0];
            const CellPath pp = rank_path(p, spec, levels), qp = rank_path(q, spec, levels);
            std::vector<int> pd, qd;
            for (int l = 0; l < levels; ++l) {
                const auto x = BaseBNumber::from_int(pp[l], b, d), y = BaseBNumber::from_int(qp[l], b, d);
                pd.insert(pd.end(), x.digits.begin(), x.digits.end());
                qd.insert(qd.end(), y.digits.begin(), y.digits.end());
            }
            const auto stream = make_streaming_comparator(InnerCurve::of(f), p, q);
            for (std::size_t k = 0; k < pd.size(); ++k) {
                const auto [x, y] = stream->next();
                CHECK(x == pd[k]);
                CHECK(y == qd[k]);
                if (x != y) break;
            }
        }
    }
}

TEST_CASE("compare_composed rejects mismatched input") {
    const Point odd = Point::from_digits({"1", "0", "1"}, 2);
    CHECK_THROWS_AS(compare_composed(odd, odd, InnerCurve::of(Family::harmonious), Driver::h2), std::invalid_argument);
    const Point even = Point::from_digits({"1", "0"}, 2);
    CHECK_THROWS_AS(compare_composed(even, even, InnerCurve::of(Family::harmonious), Driver::h3),
                    std::invalid_argument);
    CHECK_FALSE(compare_composed(even, even, InnerCurve::of(Family::harmonious), Driver::h2));
}

TEST_CASE("rectangles parse and map to xy and cd points") {
    const Rectangle r = parse_rectangle("0 0 0.5 0.5", 2, 8);
    CHECK(render_point(rect_to_point(r, RectMode::xy, 8)) == "0.00000000,0.00000000,0.10000000,0.10000000");
    const Point cd = rect_to_point(r, RectMode::cd, 8);
    for (int i = 0; i < 2; ++i) {
        CHECK(compare_value(cd.coords[i], DigitString::from_digits("01", 2)) == 0);
        CHECK(compare_value(cd.coords[2 + i], DigitString::from_digits("1", 2)) == 0);
    }
    CHECK_THROWS_AS(parse_rectangle("0.5 0 0.25 0.5", 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_rectangle("0 0 1.5 0.5", 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_rectangle("0 0 0.5", 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_rectangle("", 2, 8), std::invalid_argument);
}

TEST_CASE("degenerate rectangles sort like their points under the inner curve") {
    std::mt19937 rng(151);
    for (Family f : {Family::harmonious, Family::peano}) {
        const int b = family_base(f);
        for (int t = 0; t < 200; ++t) {
            const Point a = gen::point(rng, b, 2, 6), c = gen::point(rng, b, 2, 6);
            auto rect = [&](const Point& p) { return Rectangle{p.coords, p.coords}; };
            const bool want = compare(a, c, f);
            for (RectMode mode : {RectMode::xy, RectMode::cd}) {
                const Point x = rect_to_point(rect(a), mode, 12), y = rect_to_point(rect(c), mode, 12);
                CHECK(compare_composed(x, y, InnerCurve::of(f), driver_for(f)) == want);
            }
        }
    }
}

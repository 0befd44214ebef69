#include "sfc/compose.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sfc/verify.hpp"

namespace sfc {

std::optional<Driver> parse_driver(std::string_view tag) {
    if (tag == "h2") return Driver::h2;
    if (tag == "h3") return Driver::h3;
    return std::nullopt;
}

std::string_view to_string(Driver d) { return d == Driver::h2 ? "h2" : "h3"; }

int driver_base(Driver d) { return d == Driver::h2 ? 2 : 3; }

CurveSpec make_h2() {
    const CurveSpec h = make_standard_hilbert(BinaryFamily::harmonious, 2);
    return CurveSpec(2, 2, h.rows(), "h2");
}

CurveSpec make_h3() {
    struct Entry {
        int x, y;
        const char* perm;
        std::uint8_t mx, my;
    };
    // Meander: up the first two columns in a serpentine, across the top, down the last column.
    static constexpr Entry kTable[] = {
        {0, 0, "01", 0, 0}, {1, 0, "10", 0, 0}, {1, 1, "10", 0, 0}, {0, 1, "01", 1, 1}, {0, 2, "01", 0, 0},
        {1, 2, "01", 0, 0}, {2, 2, "01", 0, 0}, {2, 1, "10", 1, 1}, {2, 0, "10", 1, 1},
    };
    std::vector<CurveRow> rows;
    for (const Entry& e : kTable)
        rows.push_back({BaseBNumber{3, {static_cast<std::uint8_t>(e.x), static_cast<std::uint8_t>(e.y)}},
                        Permutation::parse(e.perm), {e.mx, e.my}});
    CurveSpec h3(2, 3, std::move(rows), "h3");
    if (!check_monotone(h3, {0, 0}, {1, 0}, 3).pass || !check_monotone(h3, {0, 0}, {1, 1}, 3).pass ||
        !check_vertex_continuity(h3, 3).pass)
        throw std::logic_error("h3 table fails its monotonicity or continuity check");
    return h3;
}

const CurveSpec& driver_spec(Driver d) {
    static const CurveSpec h2 = make_h2();
    static const CurveSpec h3 = make_h3();
    return d == Driver::h2 ? h2 : h3;
}

int InnerCurve::base() const {
    if (family) return family_base(*family);
    if (spec) return spec->base();
    throw std::invalid_argument("empty inner curve");
}

namespace {

// Table-driven stream: reads a whole level, then hands out the rank digits one by one. Keeps
// references into the caller's digit strings.
class GenericStream final : public StreamingComparator {
public:
    GenericStream(const CurveSpec& spec, Coords p, Coords q)
        : spec_(spec), pr_(p), qr_(q), state_(spec.dim()), pdigits_(spec.dim()), qdigits_(spec.dim()) {
        check_coords(p, spec.dim(), spec.base());
        check_coords(q, spec.dim(), spec.base());
    }

    std::pair<int, int> next() override {
        if (pos_ == 0) {
            rp_ = spec_.rank_of(state_.read_location(pr_, spec_.base()));
            const std::uint32_t rq = spec_.rank_of(state_.read_location(qr_, spec_.base()));
            spell(rp_, pdigits_);
            spell(rq, qdigits_);
        }
        const std::pair<int, int> out{pdigits_[pos_], qdigits_[pos_]};
        if (++pos_ == spec_.dim()) {
            pos_ = 0;
            state_.descend(spec_, rp_);
        }
        return out;
    }

    bool exhausted() const override { return pos_ == 0 && pr_.exhausted() && qr_.exhausted(); }

private:
    void spell(std::uint32_t r, std::vector<int>& digits) const {
        for (int i = spec_.dim(); i-- > 0;) {
            digits[i] = static_cast<int>(r % spec_.base());
            r /= spec_.base();
        }
    }

    const CurveSpec& spec_;
    PointReader pr_, qr_;
    ComparatorState state_;
    std::vector<int> pdigits_, qdigits_;
    std::uint32_t rp_ = 0;
    int pos_ = 0;
};

// Keeps its own copies of the points for streams handed out to callers.
template <class Stream>
class OwningStream final : public StreamingComparator {
public:
    template <class... Args>
    OwningStream(Point p, Point q, Args&&... args)
        : p_(std::move(p)), q_(std::move(q)), stream_(std::forward<Args>(args)..., Coords(p_.coords), Coords(q_.coords)) {}
    std::pair<int, int> next() override { return stream_.next(); }
    bool exhausted() const override { return stream_.exhausted(); }

private:
    Point p_, q_;
    Stream stream_;
};

// The driver comparator, reading digits from the two half streams instead of coordinates.
template <class Stream>
bool drive(Stream& left, Stream& right, const CurveSpec& h) {
    Stream* halves[2] = {&left, &right};
    const int base = h.base();
    ComparatorState state(2);
    for (;;) {
        std::uint32_t cp = 0, cq = 0;
        for (int i = 0; i < 2; ++i) {
            const int src = state.permutation[i];
            auto [a, b] = halves[src]->next();
            if (state.reflected[src]) {
                a = base - 1 - a;
                b = base - 1 - b;
            }
            cp = cp * base + a;
            cq = cq * base + b;
        }
        const std::uint32_t rp = h.rank_of(cp), rq = h.rank_of(cq);
        if (rp != rq) return rp < rq;
        if (left.exhausted() && right.exhausted()) return false;
        state.descend(h, rp);
    }
}

}  // namespace

std::unique_ptr<StreamingComparator> make_streaming_comparator(const InnerCurve& inner, const Point& p,
                                                               const Point& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("points differ in dimension");
    if (inner.spec) return std::make_unique<OwningStream<GenericStream>>(p, q, *inner.spec);
    if (!inner.family) throw std::invalid_argument("empty inner curve");
    switch (*inner.family) {
        case Family::butzmoore: return std::make_unique<OwningStream<ButzMooreWalker>>(p, q);
        case Family::harmonious: return std::make_unique<OwningStream<HarmoniousWalker>>(p, q);
        default: return std::make_unique<OwningStream<TernaryWalker>>(p, q, ternary_family(*inner.family));
    }
}

bool compare_composed(const Point& p, const Point& q, const InnerCurve& inner, Driver outer) {
    if (p.dim() != q.dim()) throw std::invalid_argument("points differ in dimension");
    if (p.dim() % 2) throw std::invalid_argument("composed curves need an even dimension");
    const int base = driver_base(outer);
    if (inner.base() != base) throw std::invalid_argument("inner curve and driver use different bases");
    check_point(p, p.dim(), base);
    check_point(q, p.dim(), base);

    const std::size_t h = p.coords.size() / 2;
    const Coords pl = Coords(p.coords).first(h), pr = Coords(p.coords).subspan(h);
    const Coords ql = Coords(q.coords).first(h), qr = Coords(q.coords).subspan(h);
    const CurveSpec& driver = driver_spec(outer);
    // Both halves stream on the stack; no copies of the digit strings.
    if (inner.spec) {
        GenericStream left(*inner.spec, pl, ql), right(*inner.spec, pr, qr);
        return drive(left, right, driver);
    }
    switch (*inner.family) {
        case Family::butzmoore: {
            ButzMooreWalker left(pl, ql), right(pr, qr);
            return drive(left, right, driver);
        }
        case Family::harmonious: {
            HarmoniousWalker left(pl, ql), right(pr, qr);
            return drive(left, right, driver);
        }
        default: {
            const TernaryFamily f = ternary_family(*inner.family);
            TernaryWalker left(f, pl, ql), right(f, pr, qr);
            return drive(left, right, driver);
        }
    }
}

bool verify_symmetry(const CurveSpec& inner, const Transform& rho, int max_depth) {
    if (rho.dim() != inner.dim() || static_cast<int>(rho.refl.size()) != inner.dim())
        throw std::invalid_argument("symmetry witness has the wrong dimension");
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::size_t cells = 1;
        for (int l = 0; l < depth; ++l) cells *= inner.size();
        if (cells * inner.dim() > kExpandGuard) break;
        const CellOrder order = expand_order(inner, depth);
        std::vector<std::int32_t> image(inner.dim());
        const std::size_t n = order.size();
        for (std::size_t k = 0; k < n; ++k) {
            rho.apply(order.cell(k), image, order.side);
            const auto mirror = order.cell(n - 1 - k);
            if (!std::equal(image.begin(), image.end(), mirror.begin())) return false;
        }
    }
    return true;
}

Transform default_symmetry(Family f, int d) {
    Transform rho = Transform::identity(d);
    if (is_ternary(f))
        std::fill(rho.refl.begin(), rho.refl.end(), 1);
    else
        rho.refl[0] = 1;
    return rho;
}

namespace {

struct RefinedRegion {
    std::vector<std::int32_t> cell;
    Transform transform;
};

// Regions of the level-`depth` refinement in curve order, with their composed transforms.
std::vector<RefinedRegion> refine(const CurveSpec& spec, int depth) {
    const int d = spec.dim();
    std::vector<RefinedRegion> level{{std::vector<std::int32_t>(d, 0), Transform::identity(d)}};
    std::int32_t n = 1;
    for (int l = 0; l < depth; ++l) {
        std::vector<RefinedRegion> next;
        next.reserve(level.size() * spec.size());
        for (std::uint32_t r = 0; r < spec.size(); ++r) {
            const Transform t = spec.transform(r);
            for (const auto& sub : level) {
                RefinedRegion region{std::vector<std::int32_t>(d), t.after(sub.transform)};
                t.apply(sub.cell, region.cell, n);
                for (int i = 0; i < d; ++i) region.cell[i] += spec.row(r).location.digits[i] * n;
                next.push_back(std::move(region));
            }
        }
        level = std::move(next);
        n *= spec.base();
    }
    return level;
}

}  // namespace

CurveSpec derive_composed_spec(const CurveSpec& inner, const Transform& rho) {
    const int dp = inner.dim();
    if (2 * dp > 12) throw std::invalid_argument("composed table too large");
    if (!verify_symmetry(inner, rho)) throw std::invalid_argument("symmetry witness fails verification");
    const Driver driver = inner.base() == 2 ? Driver::h2 : Driver::h3;
    const auto regions = refine(driver_spec(driver), dp);

    std::vector<CurveRow> rows;
    rows.reserve(regions.size());
    for (const auto& region : regions) {
        std::vector<std::uint8_t> loc(2 * dp), perm(2 * dp), refl(2 * dp);
        for (int k = 0; k < 2; ++k) {
            const auto r = static_cast<std::uint32_t>(region.cell[k]);
            Transform t = inner.transform(r);
            if (region.transform.refl[k]) t = t.after(rho);
            const int source_half = region.transform.perm[k];
            for (int i = 0; i < dp; ++i) {
                loc[k * dp + i] = inner.row(r).location.digits[i];
                perm[k * dp + i] = static_cast<std::uint8_t>(t.perm[i] + dp * source_half);
                refl[k * dp + i] = t.refl[i];
            }
        }
        rows.push_back({BaseBNumber{inner.base(), std::move(loc)}, Permutation::from_forward(std::move(perm)),
                        std::move(refl)});
    }
    return CurveSpec(2 * dp, inner.base(), std::move(rows), inner.name() + " o " + std::string(to_string(driver)));
}

Rectangle parse_rectangle(std::string_view line, int base, int precision, Notation notation) {
    std::istringstream in{std::string(line)};
    std::vector<DigitString> values;
    std::string token;
    while (in >> token) {
        const Scalar s = parse_scalar(token, base, precision, notation);
        if (s.negative || !s.integer.empty()) throw std::invalid_argument("rectangle bound outside [0,1): " + token);
        values.push_back(DigitString{base, s.fraction});
    }
    if (values.empty() || values.size() % 2) throw std::invalid_argument("a rectangle needs d minima and d maxima");
    const std::size_t d = values.size() / 2;
    Rectangle r{{values.begin(), values.begin() + d}, {values.begin() + d, values.end()}};
    for (std::size_t i = 0; i < d; ++i)
        if (compare_value(r.min[i], r.max[i]) > 0) throw std::invalid_argument("rectangle has min > max");
    return r;
}

Point rect_to_point(const Rectangle& r, RectMode mode, int precision) {
    if (r.min.empty() || r.min.size() != r.max.size()) throw std::invalid_argument("malformed rectangle");
    const int base = r.min.front().base;
    std::vector<DigitString> coords;
    if (mode == RectMode::xy) {
        coords = r.min;
        coords.insert(coords.end(), r.max.begin(), r.max.end());
    } else {
        for (std::size_t i = 0; i < r.min.size(); ++i) {
            const int digits = std::max<int>(precision, static_cast<int>(std::max(r.min[i].size(), r.max[i].size())) + 1);
            coords.push_back(midpoint(r.min[i], r.max[i], digits));
        }
        for (std::size_t i = 0; i < r.min.size(); ++i) coords.push_back(difference(r.max[i], r.min[i]));
    }
    return Point::make(base, std::move(coords));
}

}  // namespace sfc

#include "sfc/curvespec.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sfc {

Transform Transform::identity(int d) { return {Permutation::identity(d), std::vector<std::uint8_t>(d, 0)}; }

Transform Transform::after(const Transform& inner) const {
    const int d = dim();
    std::vector<std::uint8_t> perm(d), refl(d);
    for (int i = 0; i < d; ++i) {
        perm[i] = static_cast<std::uint8_t>(inner.perm[this->perm[i]]);
        refl[i] = static_cast<std::uint8_t>(this->refl[i] ^ inner.refl[this->perm[i]]);
    }
    return {Permutation::from_forward(std::move(perm)), std::move(refl)};
}

void Transform::apply(std::span<const std::int32_t> in, std::span<std::int32_t> out, std::int32_t n) const {
    for (int i = 0; i < dim(); ++i) {
        const std::int32_t x = in[perm[i]];
        out[i] = refl[i] ? n - 1 - x : x;
    }
}

CurveSpec::CurveSpec(int dim, int base, std::vector<CurveRow> rows, std::string name)
    : dim_(dim), base_(base), name_(std::move(name)), rows_(std::move(rows)) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("curve dimension out of range");
    if (base != 2 && base != 3) throw std::invalid_argument("curve base must be 2 or 3");
    std::uint64_t n = 1;
    for (int i = 0; i < dim; ++i) {
        n *= base;
        if (n > (std::uint64_t{1} << 26)) throw std::invalid_argument("curve table too large");
    }
    if (rows_.size() != n) throw std::invalid_argument("curve table must have b^d rows");
    rank_of_.assign(n, UINT32_MAX);
    loc_.resize(n);
    perm_.resize(n * dim);
    inv_.resize(n * dim);
    refl_.resize(n * dim);
    for (std::uint32_t r = 0; r < n; ++r) {
        const CurveRow& row = rows_[r];
        if (row.location.base != base || row.location.width() != dim || row.perm.size() != dim ||
            static_cast<int>(row.refl.size()) != dim)
            throw std::invalid_argument("curve row " + std::to_string(r) + " has the wrong shape");
        for (auto d : row.location.digits)
            if (d >= base) throw std::invalid_argument("location digit out of range");
        const auto loc = static_cast<std::uint32_t>(row.location.to_int());
        if (rank_of_[loc] != UINT32_MAX)
            throw std::invalid_argument("location " + row.location.str() + " is visited twice");
        rank_of_[loc] = r;
        loc_[r] = loc;
        for (int i = 0; i < dim; ++i) {
            perm_[r * dim + i] = static_cast<std::uint8_t>(row.perm[i]);
            inv_[r * dim + i] = static_cast<std::uint8_t>(row.perm.inv(i));
            refl_[r * dim + i] = row.refl[i] ? 1 : 0;
        }
    }
}

PointReader::PointReader(Coords coords) : dim_(static_cast<int>(coords.size())) {
    if (dim_ > kMaxDim) throw std::invalid_argument("dimension too large");
    for (int i = 0; i < dim_; ++i) readers_[i] = DigitReader(coords[i]);
}

bool PointReader::exhausted() const {
    for (int i = 0; i < dim_; ++i)
        if (!readers_[i].exhausted()) return false;
    return true;
}

ComparatorState::ComparatorState(int d) : dim(d) {
    for (int i = 0; i < d; ++i) permutation[i] = static_cast<std::uint8_t>(i);
}

std::uint32_t ComparatorState::read_location(PointReader& pt, int base) const {
    std::uint32_t c = 0;
    for (int i = 0; i < dim; ++i) {
        int digit = pt.next(permutation[i]);
        if (reflected[permutation[i]]) digit = base - 1 - digit;
        c = c * base + digit;
    }
    return c;
}

void ComparatorState::descend(const CurveSpec& spec, std::uint32_t rank) {
    std::array<std::uint8_t, kMaxDim> alt{};
    for (int i = 0; i < dim; ++i) {
        const int j = spec.inv(rank, i);
        alt[i] = permutation[j];
        if (spec.refl(rank, j)) reflected[alt[i]] = !reflected[alt[i]];
    }
    permutation = alt;
}

void check_point(const Point& p, int dim, int base) {
    if (p.base != base) throw std::invalid_argument("point base does not match the curve");
    check_coords(p.coords, dim, base);
}

void check_coords(Coords p, int dim, int base) {
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension does not match the curve");
    for (const auto& c : p)
        if (c.base != base) throw std::invalid_argument("point base does not match the curve");
}

bool compare_generic(const Point& p, const Point& q, const CurveSpec& spec) {
    check_point(p, spec.dim(), spec.base());
    check_point(q, spec.dim(), spec.base());
    PointReader pr(p), qr(q);
    ComparatorState sp(spec.dim());
    // Both points follow the same path until their ranks differ, so one state serves both.
    for (;;) {
        const std::uint32_t rp = spec.rank_of(sp.read_location(pr, spec.base()));
        const std::uint32_t rq = spec.rank_of(sp.read_location(qr, spec.base()));
        if (rp != rq) return rp < rq;
        if (pr.exhausted() && qr.exhausted()) return false;
        sp.descend(spec, rp);
    }
}

CellPath rank_path(const Point& p, const CurveSpec& spec, int depth) {
    check_point(p, spec.dim(), spec.base());
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    PointReader pr(p);
    ComparatorState s(spec.dim());
    CellPath path;
    path.reserve(depth);
    for (int l = 0; l < depth; ++l) {
        const std::uint32_t r = spec.rank_of(s.read_location(pr, spec.base()));
        path.push_back(r);
        s.descend(spec, r);
    }
    return path;
}

CellOrder expand_order(const CurveSpec& spec, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    const int d = spec.dim();
    std::size_t cells = 1;
    for (int l = 0; l < depth; ++l) {
        cells *= spec.size();
        if (cells * d > kExpandGuard) throw std::length_error("expand_order: depth exceeds the resource guard");
    }
    CellOrder order;
    order.dim = d;
    order.base = spec.base();
    order.coords.assign(d, 0);
    for (int l = 0; l < depth; ++l) {
        const std::int32_t n = order.side;
        const std::size_t prev = order.coords.size() / d;
        std::vector<std::int32_t> next(prev * spec.size() * d);
        std::size_t k = 0;
        for (std::uint32_t r = 0; r < spec.size(); ++r) {
            const CurveRow& row = spec.row(r);
            const Transform t = spec.transform(r);
            for (std::size_t j = 0; j < prev; ++j, ++k) {
                std::span<std::int32_t> out(next.data() + k * d, d);
                t.apply(order.cell(j), out, n);
                for (int i = 0; i < d; ++i) out[i] += row.location.digits[i] * n;
            }
        }
        order.coords = std::move(next);
        order.side = n * spec.base();
        order.depth = l + 1;
    }
    return order;
}

Point cell_point(std::span<const std::int32_t> cell, int base, int depth) {
    std::vector<DigitString> coords;
    coords.reserve(cell.size());
    for (std::int32_t x : cell) {
        std::vector<std::uint8_t> digits(depth + 1);
        for (int k = depth; k-- > 0;) {
            digits[k] = static_cast<std::uint8_t>(x % base);
            x /= base;
        }
        digits[depth] = 1;
        coords.push_back(DigitString{base, std::move(digits)});
    }
    return Point{base, std::move(coords)};
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

Rational operator+(Rational a, Rational b) { return Rational::make(a.num * b.den + b.num * a.den, a.den * b.den); }
Rational operator-(Rational a, Rational b) { return Rational::make(a.num * b.den - b.num * a.den, a.den * b.den); }
Rational operator*(Rational a, Rational b) { return Rational::make(a.num * b.num, a.den * b.den); }
Rational operator/(Rational a, Rational b) { return Rational::make(a.num * b.den, a.den * b.num); }

RationalPoint apply_subregion(const CurveSpec& spec, std::uint32_t r, const RationalPoint& x) {
    const CurveRow& row = spec.row(r);
    const Rational one{1, 1}, inv_b{1, spec.base()};
    RationalPoint y(spec.dim());
    for (int i = 0; i < spec.dim(); ++i) {
        const Rational v = x[row.perm[i]];
        y[i] = (Rational{row.location.digits[i], 1} + (row.refl[i] ? one - v : v)) * inv_b;
    }
    return y;
}

namespace {

// Solves g = tau(r)(g) one permutation cycle at a time: g_i = A + B g_i.
RationalPoint fixed_point(const CurveSpec& spec, std::uint32_t r) {
    const CurveRow& row = spec.row(r);
    const int d = spec.dim();
    const Rational one{1, 1}, inv_b{1, spec.base()};
    RationalPoint g(d);
    for (int i = 0; i < d; ++i) {
        Rational a{0, 1}, b{1, 1};
        int j = i;
        do {
            const bool m = row.refl[j];
            a = a + b * Rational{row.location.digits[j] + (m ? 1 : 0), 1} * inv_b;
            b = b * (m ? Rational{-1, spec.base()} : inv_b);
            j = row.perm[j];
        } while (j != i);
        g[i] = a / (one - b);
        if (!(g[i] == Rational{0, 1}) && !(g[i] == one))
            throw std::domain_error("non-convergent gate: subregion " + std::to_string(r) +
                                    " does not contract to a corner of the unit cube");
    }
    return g;
}

}  // namespace

Gates gates(const CurveSpec& spec) { return {fixed_point(spec, 0), fixed_point(spec, spec.size() - 1)}; }

Gates subregion_gates(const CurveSpec& spec, std::uint32_t r) {
    const Gates g = gates(spec);
    return {apply_subregion(spec, r, g.entrance), apply_subregion(spec, r, g.exit)};
}

std::string format_gate(const RationalPoint& x, int base) {
    std::ostringstream out;
    out << "1/" << base << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << ",";
        const Rational v = x[i] * Rational{base, 1};
        out << v.num;
        if (v.den != 1) out << "/" << v.den;
    }
    out << ")";
    return out.str();
}

std::vector<TableRow> emit_table(const CurveSpec& spec) {
    const Gates g = gates(spec);
    std::vector<TableRow> rows;
    rows.reserve(spec.size());
    for (std::uint32_t r = 0; r < spec.size(); ++r) {
        const CurveRow& row = spec.row(r);
        std::string refl;
        for (auto m : row.refl) refl.push_back(m ? '1' : '0');
        rows.push_back({BaseBNumber::from_int(r, spec.base(), spec.dim()).str(), row.location.str(), row.perm.str(),
                        row.perm.inverse_str(), refl, format_gate(apply_subregion(spec, r, g.exit), spec.base())});
    }
    return rows;
}

std::string format_tsv(const std::vector<TableRow>& rows) {
    std::string out = "rank\tlocation\tpermutation\tinverse\treflections\texit\n";
    for (const auto& r : rows)
        out += r.rank + '\t' + r.location + '\t' + r.permutation + '\t' + r.inverse + '\t' + r.reflections + '\t' +
               r.exit + '\n';
    return out;
}

}  // namespace sfc

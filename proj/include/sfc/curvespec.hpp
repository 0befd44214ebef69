#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfc/digits.hpp"
#include "sfc/graycode.hpp"
#include "sfc/permutation.hpp"

namespace sfc {

/// Upper bound on point dimension for the comparators (fixed-size state on the stack).
inline constexpr int kMaxDim = 32;

/// Signed axis permutation: output axis i reads input axis perm[i], mirrored if refl[i].
struct Transform {
    Permutation perm;
    std::vector<std::uint8_t> refl;

    static Transform identity(int d);
    int dim() const { return perm.size(); }
    /// (*this)(inner(x)).
    Transform after(const Transform& inner) const;
    /// Applies to a grid cell of side n.
    void apply(std::span<const std::int32_t> in, std::span<std::int32_t> out, std::int32_t n) const;

    friend bool operator==(const Transform&, const Transform&) = default;
};

struct CurveRow {
    BaseBNumber location;
    Permutation perm;
    std::vector<std::uint8_t> refl;
};

/// A b-regular order-preserving mono-curve as a rank-indexed table.
class CurveSpec {
public:
    CurveSpec() = default;
    /// Validates that locations are a bijection and every row has the right shape.
    CurveSpec(int dim, int base, std::vector<CurveRow> rows, std::string name = {});

    int dim() const { return dim_; }
    int base() const { return base_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(rows_.size()); }
    const std::string& name() const { return name_; }
    const CurveRow& row(std::uint32_t r) const { return rows_[r]; }
    const std::vector<CurveRow>& rows() const { return rows_; }
    Transform transform(std::uint32_t r) const { return {rows_[r].perm, rows_[r].refl}; }

    std::uint32_t rank_of(std::uint32_t location) const { return rank_of_[location]; }
    std::uint32_t location(std::uint32_t r) const { return loc_[r]; }
    int inv(std::uint32_t r, int i) const { return inv_[r * dim_ + i]; }
    bool refl(std::uint32_t r, int i) const { return refl_[r * dim_ + i]; }
    int perm(std::uint32_t r, int i) const { return perm_[r * dim_ + i]; }

private:
    int dim_ = 0;
    int base_ = 2;
    std::string name_;
    std::vector<CurveRow> rows_;
    std::vector<std::uint32_t> rank_of_;
    std::vector<std::uint32_t> loc_;
    std::vector<std::uint8_t> perm_;
    std::vector<std::uint8_t> inv_;
    std::vector<std::uint8_t> refl_;
};

/// Coordinates of a point, or of a block of its axes.
using Coords = std::span<const DigitString>;

/// Digit cursors for every coordinate of one point. Keeps references into the digit strings.
class PointReader {
public:
    explicit PointReader(const Point& p) : PointReader(Coords(p.coords)) {}
    explicit PointReader(Coords coords);
    int next(int axis) { return readers_[axis].next(); }
    bool exhausted() const;

private:
    int dim_;
    std::array<DigitReader, kMaxDim> readers_{};
};

/// Per-comparison state of the generic comparator: which source coordinate feeds each
/// logical axis, and which source coordinates are currently mirrored.
struct ComparatorState {
    int dim = 0;
    std::array<std::uint8_t, kMaxDim> permutation{};
    std::array<bool, kMaxDim> reflected{};
    bool forward = true;

    explicit ComparatorState(int d);
    /// Reads one digit per logical axis and returns the location as an integer (axis 0 most significant).
    std::uint32_t read_location(PointReader& pt, int base) const;
    /// Descends into subregion `rank`.
    void descend(const CurveSpec& spec, std::uint32_t rank);
};

void check_point(const Point& p, int dim, int base);
void check_coords(Coords p, int dim, int base);

/// True iff p precedes q on the curve; false for equal points.
bool compare_generic(const Point& p, const Point& q, const CurveSpec& spec);

using CellPath = std::vector<std::uint32_t>;
/// Ranks of the nested cells containing p, one per level.
CellPath rank_path(const Point& p, const CurveSpec& spec, int depth);

/// All cells of a depth-l grid in curve order, stored flat (dim coordinates per cell).
struct CellOrder {
    int dim = 0;
    int base = 2;
    int depth = 0;
    std::int32_t side = 1;
    std::vector<std::int32_t> coords;

    std::size_t size() const { return dim ? coords.size() / dim : 1; }
    std::span<const std::int32_t> cell(std::size_t k) const {
        return {coords.data() + k * dim, static_cast<std::size_t>(dim)};
    }
};

/// Largest number of stored coordinates expand_order will produce.
inline constexpr std::size_t kExpandGuard = std::size_t{1} << 24;

/// Brute-force oracle: applies the subregion transforms recursively.
CellOrder expand_order(const CurveSpec& spec, int depth);

/// A point strictly inside the given cell: each coordinate's depth digits followed by a 1.
Point cell_point(std::span<const std::int32_t> cell, int base, int depth);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    friend bool operator==(const Rational&, const Rational&) = default;
};
Rational operator+(Rational a, Rational b);
Rational operator-(Rational a, Rational b);
Rational operator*(Rational a, Rational b);
Rational operator/(Rational a, Rational b);

using RationalPoint = std::vector<Rational>;

struct Gates {
    RationalPoint entrance;
    RationalPoint exit;
};

/// tau(r)(x) = (1/b) M(r) x + o(r), mapping the unit cube onto S(r).
RationalPoint apply_subregion(const CurveSpec& spec, std::uint32_t r, const RationalPoint& x);
/// Entrance and exit as the fixed points of the first and last subregion transforms;
/// throws unless both are corners of the unit cube.
Gates gates(const CurveSpec& spec);
Gates subregion_gates(const CurveSpec& spec, std::uint32_t r);

/// One row of a definition table, every field already formatted.
struct TableRow {
    std::string rank;
    std::string location;
    std::string permutation;
    std::string inverse;
    std::string reflections;
    std::string exit;
};

std::vector<TableRow> emit_table(const CurveSpec& spec);
/// "1/b(x0,...)" with integer numerators where possible.
std::string format_gate(const RationalPoint& x, int base);
/// Header line "rank location permutation inverse reflections exit" plus one line per row, tab separated.
std::string format_tsv(const std::vector<TableRow>& rows);

}  // namespace sfc

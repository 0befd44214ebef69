#pragma once

// Independent oracles and random generators shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sfc/curvespec.hpp"
#include "sfc/digits.hpp"

namespace oracle {

using Digits = std::vector<int>;

/// Reflected Gray code by the textbook recursion: the tail sequence runs forwards under an
/// even leading digit and backwards under an odd one.
inline std::vector<Digits> rgc(int base, int d) {
    if (d == 0) return {Digits{}};
    const auto tail = rgc(base, d - 1);
    std::vector<Digits> out;
    for (int v = 0; v < base; ++v) {
        for (std::size_t k = 0; k < tail.size(); ++k) {
            Digits x{v};
            const auto& t = v % 2 ? tail[tail.size() - 1 - k] : tail[k];
            x.insert(x.end(), t.begin(), t.end());
            out.push_back(std::move(x));
        }
    }
    return out;
}

inline std::int32_t ipow(int b, int e) {
    std::int32_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

/// Position of a depth-`depth` grid cell along the curve, found top-down: locate the subregion
/// by scanning the table, then undo its transform. Shares no code with expand_order.
inline std::uint64_t cell_rank(const sfc::CurveSpec& spec, std::vector<std::int32_t> cell, int depth) {
    const int d = spec.dim(), b = spec.base();
    std::int32_t side = ipow(b, depth);
    std::uint64_t rank = 0;
    std::vector<std::int32_t> y(d);
    for (int l = 0; l < depth; ++l) {
        side /= b;
        std::uint32_t r = 0;
        for (; r < spec.size(); ++r) {
            const auto& loc = spec.row(r).location.digits;
            bool hit = true;
            for (int i = 0; i < d && hit; ++i) hit = loc[i] == cell[i] / side;
            if (hit) break;
        }
        rank = rank * spec.size() + r;
        const auto& row = spec.row(r);
        for (int i = 0; i < d; ++i) {
            const std::int32_t local = cell[i] % side;
            y[row.perm[i]] = row.refl[i] ? side - 1 - local : local;
        }
        cell = y;
    }
    return rank;
}

/// Every cell of the depth-`depth` grid in lexicographic coordinate order.
inline std::vector<std::vector<std::int32_t>> all_cells(int d, int base, int depth) {
    const std::int32_t side = ipow(base, depth);
    std::vector<std::vector<std::int32_t>> cells;
    std::vector<std::int32_t> c(d, 0);
    for (;;) {
        cells.push_back(c);
        int i = d - 1;
        while (i >= 0 && ++c[i] == side) c[i--] = 0;
        if (i < 0) break;
    }
    return cells;
}

struct EquivalenceResult {
    std::size_t cells = 0;
    std::size_t comparisons = 0;
    std::size_t mismatches = 0;
    bool exhaustive = false;
};

/// Up to this many cells every ordered pair is compared.
inline constexpr std::size_t kExhaustiveCells = 6561;

/// Checks a comparator against cell_rank on representative points of every cell. Small grids
/// get every ordered pair. Larger ones get a sort of all cells, both orders of every adjacent
/// pair, and random pairs.
template <class Less>
EquivalenceResult check_equivalence(const sfc::CurveSpec& spec, int depth, Less less, std::mt19937& rng,
                                    std::size_t random_pairs = 20000) {
    struct Item {
        sfc::Point p;
        std::uint64_t rank;
    };
    std::vector<Item> items;
    for (const auto& c : all_cells(spec.dim(), spec.base(), depth))
        items.push_back({sfc::cell_point(c, spec.base(), depth), cell_rank(spec, c, depth)});
    EquivalenceResult res;
    res.cells = items.size();
    auto probe = [&](const Item& a, const Item& b) {
        ++res.comparisons;
        if (less(a.p, b.p) != (a.rank < b.rank)) ++res.mismatches;
    };
    if (items.size() <= kExhaustiveCells) {
        res.exhaustive = true;
        for (const auto& a : items)
            for (const auto& b : items) probe(a, b);
        return res;
    }
    std::shuffle(items.begin(), items.end(), rng);
    std::vector<Item> sorted = items;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Item& a, const Item& b) { return less(a.p, b.p); });
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        ++res.comparisons;
        if (sorted[k].rank != k) ++res.mismatches;
    }
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        probe(sorted[k - 1], sorted[k]);
        probe(sorted[k], sorted[k - 1]);
    }
    std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
    for (std::size_t k = 0; k < random_pairs; ++k) probe(items[pick(rng)], items[pick(rng)]);
    return res;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Drops one tab-separated column from every line.
inline std::string without_column(const std::string& tsv, const std::string& name) {
    std::istringstream in(tsv);
    std::string line, out;
    int drop = -1;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream f(line);
        for (std::string x; std::getline(f, x, '\t');) fields.push_back(x);
        if (drop < 0)
            for (std::size_t i = 0; i < fields.size(); ++i)
                if (fields[i] == name) drop = static_cast<int>(i);
        if (drop >= 0 && drop < static_cast<int>(fields.size())) fields.erase(fields.begin() + drop);
        for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "\t" : "") + fields[i];
        out += '\n';
    }
    return out;
}

}  // namespace oracle

namespace gen {

inline sfc::DigitString digits(std::mt19937& rng, int base, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), digit(0, base - 1);
    std::vector<std::uint8_t> d(len(rng));
    for (auto& x : d) x = static_cast<std::uint8_t>(digit(rng));
    return sfc::DigitString{base, std::move(d)};
}

inline sfc::Point point(std::mt19937& rng, int base, int dim, int max_len) {
    std::vector<sfc::DigitString> c;
    for (int i = 0; i < dim; ++i) c.push_back(digits(rng, base, max_len));
    return sfc::Point::make(base, std::move(c));
}

/// Coordinates with an integer part of up to `max_int` digits and an optional sign.
inline sfc::ExtendedPoint extended_point(std::mt19937& rng, int base, int dim, int max_int, int max_frac,
                                         bool allow_negative) {
    std::uniform_int_distribution<int> len(0, max_int), digit(0, base - 1), coin(0, 1);
    sfc::ExtendedPoint p{base, {}};
    for (int i = 0; i < dim; ++i) {
        sfc::Scalar s{base, false, {}, digits(rng, base, max_frac).digits};
        const int n = len(rng);
        for (int k = 0; k < n; ++k) s.integer.push_back(static_cast<std::uint8_t>(digit(rng)));
        while (!s.integer.empty() && s.integer.front() == 0) s.integer.erase(s.integer.begin());
        s.negative = allow_negative && coin(rng) && !s.is_zero();
        p.coords.push_back(std::move(s));
    }
    return p;
}

inline std::vector<std::uint8_t> permutation(std::mt19937& rng, int d) {
    std::vector<std::uint8_t> p(d);
    for (int i = 0; i < d; ++i) p[i] = static_cast<std::uint8_t>(i);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace gen

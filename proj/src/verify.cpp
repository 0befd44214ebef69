#include "sfc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sfc {

std::string to_string(const Face& f) {
    return "F" + std::to_string(f.side) + "_" + std::to_string(f.axis);
}

std::string format_cell(const std::vector<std::int32_t>& cell) {
    std::string s = "(";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cell[i]);
    }
    return s + ")";
}

CellOrder visible_order(const CurveSpec& spec, Face face, int depth) {
    const int d = spec.dim();
    if (d < 2) throw std::invalid_argument("faces need dimension at least 2");
    if (face.axis < 0 || face.axis >= d || (face.side != 0 && face.side != 1))
        throw std::invalid_argument("face out of range");
    const CellOrder full = expand_order(spec, depth);
    CellOrder out;
    out.dim = d - 1;
    out.base = full.base;
    out.depth = depth;
    out.side = full.side;
    const std::int32_t target = face.side ? full.side - 1 : 0;
    for (std::size_t k = 0; k < full.size(); ++k) {
        const auto c = full.cell(k);
        if (c[face.axis] != target) continue;
        for (int i = 0; i < d; ++i)
            if (i != face.axis) out.coords.push_back(c[i]);
    }
    return out;
}

std::string ShowsReport::witness() const {
    if (pass) return "-";
    return to_string(face) + " depth " + std::to_string(depth) + ": position " + std::to_string(index) + " expected " +
           format_cell(expected) + " got " + format_cell(actual);
}

ShowsReport check_shows(const CurveSpec& spec_d, const CurveSpec& spec_dm1, Face face, int depth,
                        std::optional<int> mirror_axis) {
    if (spec_d.dim() != spec_dm1.dim() + 1) throw std::invalid_argument("curve dimensions must differ by one");
    if (spec_d.base() != spec_dm1.base()) throw std::invalid_argument("curve bases differ");
    if (mirror_axis && (*mirror_axis < 0 || *mirror_axis >= spec_dm1.dim()))
        throw std::invalid_argument("mirror axis out of range");
    const CellOrder seen = visible_order(spec_d, face, depth);
    const CellOrder ref = expand_order(spec_dm1, depth);
    ShowsReport report;
    report.face = face;
    report.depth = depth;
    const int d = spec_dm1.dim();
    for (std::size_t k = 0; k < ref.size(); ++k) {
        std::vector<std::int32_t> want(ref.cell(k).begin(), ref.cell(k).end());
        if (mirror_axis) want[*mirror_axis] = ref.side - 1 - want[*mirror_axis];
        const auto got = seen.cell(k);
        if (!std::equal(want.begin(), want.end(), got.begin(), got.begin() + d)) {
            report.pass = false;
            report.index = k;
            report.expected = std::move(want);
            report.actual.assign(got.begin(), got.end());
            return report;
        }
    }
    return report;
}

std::string ContinuityReport::witness() const {
    if (pass) return "-";
    return "cells " + std::to_string(index - 1) + "," + std::to_string(index) + " " + format_cell(before) + " " +
           format_cell(after) + " share no vertex";
}

ContinuityReport check_vertex_continuity(const CurveSpec& spec, int depth) {
    const CellOrder order = expand_order(spec, depth);
    ContinuityReport report;
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto a = order.cell(k - 1);
        const auto b = order.cell(k);
        for (int i = 0; i < order.dim; ++i) {
            if (std::abs(a[i] - b[i]) > 1) {
                report.pass = false;
                report.index = k;
                report.before.assign(a.begin(), a.end());
                report.after.assign(b.begin(), b.end());
                return report;
            }
        }
    }
    return report;
}

std::string OrientationReport::summary() const {
    std::ostringstream out;
    if (neutral)
        out << "neutral at depth " << closure_depth;
    else
        out << "not neutral";
    out << "; |S_k| =";
    for (auto s : sizes) out << " " << s;
    return out.str();
}

OrientationReport check_neutral_orientation(const CurveSpec& spec, int max_depth) {
    const int d = spec.dim();
    if (d > 7) throw std::invalid_argument("orientation check supports d <= 7");
    std::size_t factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= i;

    using Perm = std::vector<std::uint8_t>;
    std::set<Perm> generators;
    for (const auto& row : spec.rows()) generators.insert(row.perm.forward());

    OrientationReport report;
    std::vector<std::set<Perm>> history;
    std::set<Perm> current = generators;
    for (int k = 1; k <= max_depth; ++k) {
        report.sizes.push_back(current.size());
        if (current.size() == factorial) {
            report.neutral = true;
            report.closure_depth = k;
            return report;
        }
        // S_k is determined by S_(k-1), so a repeated set means the sizes cycle forever.
        if (std::find(history.begin(), history.end(), current) != history.end()) return report;
        history.push_back(current);
        std::set<Perm> next;
        for (const auto& s : current)
            for (const auto& g : generators) {
                Perm c(d);
                for (int i = 0; i < d; ++i) c[i] = s[g[i]];
                next.insert(std::move(c));
            }
        current = std::move(next);
    }
    return report;
}

std::string MonotoneReport::witness() const {
    if (pass) return "-";
    return "order decreases at step " + std::to_string(index) + " cell " + format_cell(cell);
}

MonotoneReport check_monotone(const CurveSpec& spec2d, Corner from, Corner to, int depth) {
    if (spec2d.dim() != 2) throw std::invalid_argument("monotonicity is checked on 2D curves");
    auto corner_ok = [](Corner c) { return (c.x == 0 || c.x == 1) && (c.y == 0 || c.y == 1); };
    if (!corner_ok(from) || !corner_ok(to)) throw std::invalid_argument("segment ends must be corners");
    const bool edge = (from.x == to.x) != (from.y == to.y);
    const bool diagonal = from.x == from.y && to.x == to.y && from.x != to.x;
    if (!edge && !diagonal) throw std::invalid_argument("unsupported segment");

    const CellOrder order = expand_order(spec2d, depth);
    const std::int32_t n = order.side;
    std::vector<std::size_t> position(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto c = order.cell(k);
        position[static_cast<std::size_t>(c[0]) * n + c[1]] = k;
    }
    // Walk in n steps; a coordinate that is fixed sits in the first or last row of cells.
    auto coord = [n](int a, int b, std::int32_t t) -> std::int32_t {
        if (a == b) return a ? n - 1 : 0;
        return a < b ? t : n - 1 - t;
    };
    MonotoneReport report;
    std::size_t last = 0;
    for (std::int32_t t = 0; t < n; ++t) {
        const std::int32_t x = coord(from.x, to.x, t), y = coord(from.y, to.y, t);
        const std::size_t pos = position[static_cast<std::size_t>(x) * n + y];
        if (t > 0 && pos <= last) {
            report.pass = false;
            report.index = static_cast<std::size_t>(t);
            report.cell = {x, y};
            return report;
        }
        last = pos;
    }
    return report;
}

}  // namespace sfc

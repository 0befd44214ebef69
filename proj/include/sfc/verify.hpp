#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfc/curvespec.hpp"

namespace sfc {

/// Face F^side_axis of the unit cube: coordinate `axis` is 0 (side 0) or 1 (side 1).
struct Face {
    int axis = 0;
    int side = 0;
};

std::string to_string(const Face& f);

/// Cells of expand_order touching the face, with the face axis removed, in curve order.
CellOrder visible_order(const CurveSpec& spec, Face face, int depth);

struct ShowsReport {
    Face face;
    int depth = 0;
    bool pass = true;
    std::size_t index = 0;  // first position where the orders disagree
    std::vector<std::int32_t> expected;
    std::vector<std::int32_t> actual;

    std::string witness() const;
};

/// Does spec_d show spec_dm1 on the face? With mirror_axis set, the reference order is
/// mirrored in that axis first.
ShowsReport check_shows(const CurveSpec& spec_d, const CurveSpec& spec_dm1, Face face, int depth,
                        std::optional<int> mirror_axis = std::nullopt);

struct ContinuityReport {
    bool pass = true;
    std::size_t index = 0;  // cells index-1 and index share no vertex
    std::vector<std::int32_t> before;
    std::vector<std::int32_t> after;

    std::string witness() const;
};

ContinuityReport check_vertex_continuity(const CurveSpec& spec, int depth);

struct OrientationReport {
    bool neutral = false;
    int closure_depth = 0;             // smallest k with |S_k| = d!, when neutral
    std::vector<std::size_t> sizes;    // |S_1|, |S_2|, ...
    std::string summary() const;
};

/// Iterates S_k, the set of compositions of exactly k subregion permutations, until it holds
/// all d! permutations, repeats an earlier set, or k exceeds max_depth.
OrientationReport check_neutral_orientation(const CurveSpec& spec, int max_depth);

struct Corner {
    int x = 0;
    int y = 0;
};

struct MonotoneReport {
    bool pass = true;
    std::size_t index = 0;  // position along the segment where the order decreases
    std::vector<std::int32_t> cell;

    std::string witness() const;
};

/// Cells met by an edge or the ascending diagonal of the unit square, walked from `from`
/// to `to`, must appear in strictly increasing curve order. Other segments are rejected.
MonotoneReport check_monotone(const CurveSpec& spec2d, Corner from, Corner to, int depth);

std::string format_cell(const std::vector<std::int32_t>& cell);

}  // namespace sfc

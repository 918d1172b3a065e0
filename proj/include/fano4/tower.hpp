#pragma once

#include <string>
#include <vector>

#include "fano4/invariants.hpp"
#include "fano4/surfaces.hpp"

namespace fano4 {

enum class TowerOp {
    BlowUpPoint,
    FlipLines,
    BlowUpSurface,
    BlowDownSurface,
};

[[nodiscard]] std::string to_string(TowerOp op);

/// One step of a tower description.  `n` is meaningful for FlipLines,
/// `data` for the two surface operations.
struct TowerStep {
    TowerOp op = TowerOp::BlowUpPoint;
    Int n = 0;
    SurfaceData data{};

    friend bool operator==(const TowerStep&, const TowerStep&) = default;
};

struct TowerConfig {
    std::vector<TowerStep> steps;

    friend bool operator==(const TowerConfig&, const TowerConfig&) = default;
};

/// Parse a tower description.  Line-oriented format:
///
///     # comment
///     start: p4
///     step: blowup_point
///     step: flip_lines
///     n: 3
///     step: blowup_surface
///     ks2: 7
///     ks_dot_kw: 22
///     kw2: 66
///     c2n: 8
///     chios: 1
///     h11s: 3
///     h20s: 0
///     b1s: 0
///
/// The first directive must be `start: p4`.  `flip_lines` takes exactly the
/// key `n`; `blowup_surface` / `blowdown_surface` take exactly the eight
/// surface keys shown above, in any order.  Blank lines and `#` comments are
/// ignored.  Unknown keys, duplicates, missing keys, and malformed values all
/// raise parse_error carrying the 1-based line and column of the offence.
[[nodiscard]] TowerConfig parse_tower(const std::string& text);

/// Canonical form: `start: p4`, then each step with its keys in the
/// documented order.  parse_tower(serialize_tower(c)) == c.
[[nodiscard]] std::string serialize_tower(const TowerConfig& config);

/// Apply the steps in order, starting from the projective-space record.
/// Returns the full trace: element 0 is the start, element i the record after
/// step i.  A step whose preconditions fail raises tower_error with the
/// 1-based step index.
[[nodiscard]] std::vector<FourfoldRecord> run_tower(const TowerConfig& config);

}  // namespace fano4

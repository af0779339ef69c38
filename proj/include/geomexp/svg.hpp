#pragma once

#include "geomexp/partitions.hpp"
#include "geomexp/point.hpp"

#include <optional>
#include <string>

namespace geomexp {

/// Minimal static SVG: points, optional sector lines through an apex, optional
/// marked point. No timestamps, so replays are byte-identical.
std::string points_svg(const PointSet& P, const std::optional<Point>& mark,
                       const std::optional<SectorPartition>& sectors);

std::string partition_svg(const PointSet& P, const LabeledPartition& L);

}  // namespace geomexp

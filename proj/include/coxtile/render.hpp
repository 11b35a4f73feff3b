#pragma once

// SVG and JSON output for patches and catalogs.

#include "coxtile/cut_and_project.hpp"

#include <map>
#include <string>

namespace coxtile {

struct RenderStyle {
    std::map<std::string, std::string> palette;  // class id -> "#rrggbb"
    double stroke_width = 0.02;                  // in tile units
    double scale = 40.0;                         // pixels per unit length
    double margin = 10.0;                        // pixels
};

// Evenly spaced hues over the catalog classes of the patch's kind and rank.
RenderStyle default_style(const Patch& patch);

// Throws std::invalid_argument when a tile's class has no palette entry or
// scale <= 0. An empty patch gives a valid document carrying a comment.
std::string render_svg(const Patch& patch, const RenderStyle& style);

// x rounded to 12 significant digits (the precision of the JSON output).
double round_significant(double x, int digits = 12);

std::string patch_to_json(const Patch& patch, int indent = -1);
// Throws std::invalid_argument on malformed input.
Patch patch_from_json(const std::string& text);

// {h, n, rhombi: [...], triangles: [...]}; either list may be left out.
std::string catalog_json(LatticeRank rank, bool rhombi, bool triangles, int indent = 2);

}  // namespace coxtile

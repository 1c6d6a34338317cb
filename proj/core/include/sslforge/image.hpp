// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sslforge {

/// 8-bit RGB raster, row-major, 3 bytes per pixel. Coordinates are
/// (x, y) = (column, row) with the origin at the top-left corner.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // height * width * 3 bytes

    static ImageBuffer blank(int width, int height);
    static ImageBuffer filled(int width, int height, std::array<std::uint8_t, 3> rgb);

    std::uint8_t* pixel(int x, int y) {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    const std::uint8_t* pixel(int x, int y) const {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

    bool operator==(const ImageBuffer&) const = default;
};

/// Axis-aligned rectangle in pixel units, inclusive of its top-left corner.
struct Region {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;

    bool operator==(const Region&) const = default;
};

/// Sub-pixel point.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2D&) const = default;
};

/// Invertible 2D affine map (x, y) -> (a*x + b*y + c, d*x + e*y + f).
struct AffineMap {
    double a = 1.0, b = 0.0, c = 0.0;
    double d = 0.0, e = 1.0, f = 0.0;

    Point2D apply(Point2D p) const {
        return {a * p.x + b * p.y + c, d * p.x + e * p.y + f};
    }
    double det() const { return a * e - b * d; }

    /// Throws SingularMap when |det| < 1e-12.
    AffineMap inverse() const;

    /// Composition: returns the map "outer after this".
    AffineMap then(const AffineMap& outer) const;

    static AffineMap identity() { return {}; }
    static AffineMap translation(double tx, double ty) {
        return {1.0, 0.0, tx, 0.0, 1.0, ty};
    }

    bool operator==(const AffineMap&) const = default;
};

/// Clockwise rotation by a multiple of 45 degrees in [0, 360).
///
/// Quarter turns are exact index permutations (dimensions swap for 90/270).
/// The 45-degree family rotates about the image centre with bilinear
/// sampling onto the axis-aligned bounding box of the rotated corners;
/// pixels with no source coverage are black. Throws InvalidAngle for any
/// angle outside {0, 45, ..., 315}.
ImageBuffer rotate_cw(const ImageBuffer& img, int angle_degrees);

/// Copy with the pixels of `r` replaced by mid-gray (128, 128, 128).
ImageBuffer mask_region(const ImageBuffer& img, const Region& r);

/// The w x h sub-image at `r`.
ImageBuffer crop_region(const ImageBuffer& img, const Region& r);

/// Paste `patch` so its top-left corner lands at (x0, y0). Must fit.
void paste_region(ImageBuffer& img, const ImageBuffer& patch, int x0, int y0);

/// Centre-crop to dimensions divisible by (rows, cols), then split row-major
/// into rows*cols patches of floor(H/rows) x floor(W/cols). Patch index is
/// 1-based row-major. Throws ImageTooSmall when a patch dimension is zero.
std::vector<ImageBuffer> partition_grid(const ImageBuffer& img, int rows, int cols);

/// Inverse of partition_grid: stitch rows*cols equally sized patches
/// (row-major order) back into one image.
ImageBuffer assemble_grid(const std::vector<ImageBuffer>& patches, int rows, int cols);

struct AffineResult {
    ImageBuffer image;
    std::vector<Point2D> points;
};

/// Warp `img` by `map` (inverse-sampled, bilinear, black outside the source)
/// onto a canvas of the same dimensions, and push each point through the
/// forward map in exact arithmetic.
AffineResult apply_affine(const ImageBuffer& img, const std::vector<Point2D>& points,
                          const AffineMap& map);

/// Draw a filled red disc (radius 6) at each point plus its decimal label
/// (1..99) on a rounded red tag beside it. Purely cosmetic: callers must not
/// derive ground truth from marker geometry.
ImageBuffer annotate_points(const ImageBuffer& img, const std::vector<Point2D>& points,
                            const std::vector<int>& labels);

/// Bilinear resize (half-pixel centres, edge clamp). Constant images stay
/// constant.
ImageBuffer resize_bilinear(const ImageBuffer& img, int out_width, int out_height);

/// Mirror left-right.
ImageBuffer flip_horizontal(const ImageBuffer& img);

/// Throws RegionOutOfBounds unless `r` fits inside w x h with w, h >= 1.
void require_region_in_bounds(const Region& r, int width, int height);

}  // namespace sslforge

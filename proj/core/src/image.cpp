// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "sslforge/errors.hpp"

namespace sslforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_valid(const ImageBuffer& img) {
    if (img.width < 1 || img.height < 1 ||
        img.data.size() != img.pixel_count() * 3) {
        throw Error("malformed ImageBuffer");
    }
}

// Bilinear fetch with black outside the source raster.
void sample_black(const ImageBuffer& img, double x, double y, double out[3]) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0;
    const double fy = y - y0;
    out[0] = out[1] = out[2] = 0.0;
    for (int dy = 0; dy <= 1; ++dy) {
        const int yy = y0 + dy;
        if (yy < 0 || yy >= img.height) continue;
        const double wy = dy ? fy : 1.0 - fy;
        for (int dx = 0; dx <= 1; ++dx) {
            const int xx = x0 + dx;
            if (xx < 0 || xx >= img.width) continue;
            const double w = wy * (dx ? fx : 1.0 - fx);
            const std::uint8_t* p = img.pixel(xx, yy);
            out[0] += w * p[0];
            out[1] += w * p[1];
            out[2] += w * p[2];
        }
    }
}

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

ImageBuffer rotate90(const ImageBuffer& in) {
    ImageBuffer out = ImageBuffer::blank(in.height, in.width);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            std::memcpy(out.pixel(x, y), in.pixel(y, in.height - 1 - x), 3);
        }
    }
    return out;
}

ImageBuffer rotate180(const ImageBuffer& in) {
    ImageBuffer out = ImageBuffer::blank(in.width, in.height);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            std::memcpy(out.pixel(x, y), in.pixel(in.width - 1 - x, in.height - 1 - y), 3);
        }
    }
    return out;
}

ImageBuffer rotate270(const ImageBuffer& in) {
    ImageBuffer out = ImageBuffer::blank(in.height, in.width);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            std::memcpy(out.pixel(x, y), in.pixel(in.width - 1 - y, x), 3);
        }
    }
    return out;
}

ImageBuffer rotate_free(const ImageBuffer& in, int angle_degrees) {
    const double theta = angle_degrees * kPi / 180.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // Canvas = bounding box of the rotated source rectangle.
    const int out_w = static_cast<int>(
        std::ceil(in.width * std::abs(c) + in.height * std::abs(s) - 1e-7));
    const int out_h = static_cast<int>(
        std::ceil(in.width * std::abs(s) + in.height * std::abs(c) - 1e-7));
    const double cx_in = (in.width - 1) / 2.0;
    const double cy_in = (in.height - 1) / 2.0;
    const double cx_out = (out_w - 1) / 2.0;
    const double cy_out = (out_h - 1) / 2.0;

    ImageBuffer out = ImageBuffer::blank(out_w, out_h);
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) {
            const double dx = x - cx_out;
            const double dy = y - cy_out;
            // Inverse of the clockwise map [[c, -s], [s, c]] (y axis down).
            const double sx = c * dx + s * dy + cx_in;
            const double sy = -s * dx + c * dy + cy_in;
            double rgb[3];
            sample_black(in, sx, sy, rgb);
            std::uint8_t* p = out.pixel(x, y);
            p[0] = to_byte(rgb[0]);
            p[1] = to_byte(rgb[1]);
            p[2] = to_byte(rgb[2]);
        }
    }
    return out;
}

// 5x7 digit glyphs, bit 4 = leftmost column.
constexpr std::uint8_t kDigitFont[10][7] = {
    {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E},  // 0
    {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E},  // 1
    {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F},  // 2
    {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E},  // 3
    {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02},  // 4
    {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E},  // 5
    {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E},  // 6
    {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08},  // 7
    {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E},  // 8
    {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C},  // 9
};

void set_pixel_clipped(ImageBuffer& img, int x, int y, std::uint8_t r,
                       std::uint8_t g, std::uint8_t b) {
    if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
    std::uint8_t* p = img.pixel(x, y);
    p[0] = r;
    p[1] = g;
    p[2] = b;
}

void draw_disc(ImageBuffer& img, int cx, int cy, int radius) {
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (dx * dx + dy * dy <= radius * radius) {
                set_pixel_clipped(img, cx + dx, cy + dy, 255, 0, 0);
            }
        }
    }
}

void draw_label_tag(ImageBuffer& img, int cx, int cy, int label) {
    const std::string digits = std::to_string(label);
    const int n = static_cast<int>(digits.size());
    constexpr int kScale = 2;
    constexpr int kGlyphW = 5 * kScale;
    constexpr int kGlyphH = 7 * kScale;
    constexpr int kPad = 3;
    constexpr int kGap = 2;
    constexpr int kCorner = 3;
    const int tag_w = 2 * kPad + n * kGlyphW + (n - 1) * kGap;
    const int tag_h = 2 * kPad + kGlyphH;

    // Anchor above-right of the disc, clamped into the image.
    int tx = cx + 8;
    int ty = cy - 8 - tag_h;
    tx = std::clamp(tx, 0, std::max(0, img.width - tag_w));
    ty = std::clamp(ty, 0, std::max(0, img.height - tag_h));

    for (int y = 0; y < tag_h; ++y) {
        for (int x = 0; x < tag_w; ++x) {
            // Rounded corners: drop pixels outside the corner quarter-discs.
            const int ex = std::max({kCorner - x, x - (tag_w - 1 - kCorner), 0});
            const int ey = std::max({kCorner - y, y - (tag_h - 1 - kCorner), 0});
            if (ex * ex + ey * ey > kCorner * kCorner) continue;
            set_pixel_clipped(img, tx + x, ty + y, 255, 0, 0);
        }
    }
    for (int i = 0; i < n; ++i) {
        const int d = digits[i] - '0';
        const int gx = tx + kPad + i * (kGlyphW + kGap);
        const int gy = ty + kPad;
        for (int row = 0; row < 7; ++row) {
            for (int col = 0; col < 5; ++col) {
                if (!((kDigitFont[d][row] >> (4 - col)) & 1)) continue;
                for (int sy = 0; sy < kScale; ++sy) {
                    for (int sx = 0; sx < kScale; ++sx) {
                        set_pixel_clipped(img, gx + col * kScale + sx,
                                          gy + row * kScale + sy, 255, 255, 255);
                    }
                }
            }
        }
    }
}

}  // namespace

ImageBuffer ImageBuffer::blank(int width, int height) {
    if (width < 1 || height < 1) throw Error("ImageBuffer dimensions must be >= 1");
    ImageBuffer img;
    img.width = width;
    img.height = height;
    img.data.assign(static_cast<std::size_t>(width) * height * 3, 0);
    return img;
}

ImageBuffer ImageBuffer::filled(int width, int height, std::array<std::uint8_t, 3> rgb) {
    ImageBuffer img = blank(width, height);
    for (std::size_t i = 0; i < img.data.size(); i += 3) {
        img.data[i] = rgb[0];
        img.data[i + 1] = rgb[1];
        img.data[i + 2] = rgb[2];
    }
    return img;
}

AffineMap AffineMap::inverse() const {
    const double determinant = det();
    if (std::abs(determinant) < 1e-12) throw SingularMap("affine map is singular");
    const double ia = e / determinant;
    const double ib = -b / determinant;
    const double id = -d / determinant;
    const double ie = a / determinant;
    return {ia, ib, -(ia * c + ib * f), id, ie, -(id * c + ie * f)};
}

AffineMap AffineMap::then(const AffineMap& o) const {
    return {o.a * a + o.b * d, o.a * b + o.b * e, o.a * c + o.b * f + o.c,
            o.d * a + o.e * d, o.d * b + o.e * e, o.d * c + o.e * f + o.f};
}

void require_region_in_bounds(const Region& r, int width, int height) {
    if (r.w < 1 || r.h < 1 || r.x0 < 0 || r.y0 < 0 || r.x0 + r.w > width ||
        r.y0 + r.h > height) {
        throw RegionOutOfBounds("region " + std::to_string(r.x0) + "," +
                                std::to_string(r.y0) + " " + std::to_string(r.w) +
                                "x" + std::to_string(r.h) + " outside " +
                                std::to_string(width) + "x" + std::to_string(height));
    }
}

ImageBuffer rotate_cw(const ImageBuffer& img, int angle_degrees) {
    require_valid(img);
    if (angle_degrees < 0 || angle_degrees >= 360 || angle_degrees % 45 != 0) {
        throw InvalidAngle("angle " + std::to_string(angle_degrees) +
                           " not a multiple of 45 in [0, 360)");
    }
    switch (angle_degrees) {
        case 0:
            return img;
        case 90:
            return rotate90(img);
        case 180:
            return rotate180(img);
        case 270:
            return rotate270(img);
        default:
            return rotate_free(img, angle_degrees);
    }
}

ImageBuffer mask_region(const ImageBuffer& img, const Region& r) {
    require_valid(img);
    require_region_in_bounds(r, img.width, img.height);
    ImageBuffer out = img;
    for (int y = r.y0; y < r.y0 + r.h; ++y) {
        std::uint8_t* row = out.pixel(r.x0, y);
        std::memset(row, 128, static_cast<std::size_t>(r.w) * 3);
    }
    return out;
}

ImageBuffer crop_region(const ImageBuffer& img, const Region& r) {
    require_valid(img);
    require_region_in_bounds(r, img.width, img.height);
    ImageBuffer out = ImageBuffer::blank(r.w, r.h);
    for (int y = 0; y < r.h; ++y) {
        std::memcpy(out.pixel(0, y), img.pixel(r.x0, r.y0 + y),
                    static_cast<std::size_t>(r.w) * 3);
    }
    return out;
}

void paste_region(ImageBuffer& img, const ImageBuffer& patch, int x0, int y0) {
    require_region_in_bounds({x0, y0, patch.width, patch.height}, img.width, img.height);
    for (int y = 0; y < patch.height; ++y) {
        std::memcpy(img.pixel(x0, y0 + y), patch.pixel(0, y),
                    static_cast<std::size_t>(patch.width) * 3);
    }
}

std::vector<ImageBuffer> partition_grid(const ImageBuffer& img, int rows, int cols) {
    require_valid(img);
    if (rows < 1 || cols < 1) throw Error("grid dimensions must be >= 1");
    const int patch_h = img.height / rows;
    const int patch_w = img.width / cols;
    if (patch_h == 0 || patch_w == 0) {
        throw ImageTooSmall("image " + std::to_string(img.width) + "x" +
                            std::to_string(img.height) + " cannot host a " +
                            std::to_string(rows) + "x" + std::to_string(cols) + " grid");
    }
    const int x_off = (img.width - patch_w * cols) / 2;
    const int y_off = (img.height - patch_h * rows) / 2;
    std::vector<ImageBuffer> patches;
    patches.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            patches.push_back(crop_region(
                img, {x_off + c * patch_w, y_off + r * patch_h, patch_w, patch_h}));
        }
    }
    return patches;
}

ImageBuffer assemble_grid(const std::vector<ImageBuffer>& patches, int rows, int cols) {
    if (rows < 1 || cols < 1 ||
        patches.size() != static_cast<std::size_t>(rows) * cols) {
        throw Error("patch count does not match grid dimensions");
    }
    const int patch_w = patches[0].width;
    const int patch_h = patches[0].height;
    for (const ImageBuffer& p : patches) {
        if (p.width != patch_w || p.height != patch_h) {
            throw Error("patches differ in size");
        }
    }
    ImageBuffer out = ImageBuffer::blank(patch_w * cols, patch_h * rows);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            paste_region(out, patches[static_cast<std::size_t>(r) * cols + c],
                         c * patch_w, r * patch_h);
        }
    }
    return out;
}

AffineResult apply_affine(const ImageBuffer& img, const std::vector<Point2D>& points,
                          const AffineMap& map) {
    require_valid(img);
    const AffineMap inv = map.inverse();  // throws SingularMap

    AffineResult result;
    result.image = ImageBuffer::blank(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const Point2D src = inv.apply({static_cast<double>(x), static_cast<double>(y)});
            double rgb[3];
            sample_black(img, src.x, src.y, rgb);
            std::uint8_t* p = result.image.pixel(x, y);
            p[0] = to_byte(rgb[0]);
            p[1] = to_byte(rgb[1]);
            p[2] = to_byte(rgb[2]);
        }
    }
    result.points.reserve(points.size());
    for (const Point2D& pt : points) result.points.push_back(map.apply(pt));
    return result;
}

ImageBuffer annotate_points(const ImageBuffer& img, const std::vector<Point2D>& points,
                            const std::vector<int>& labels) {
    require_valid(img);
    if (points.size() != labels.size()) {
        throw Error("points and labels differ in length");
    }
    ImageBuffer out = img;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (labels[i] < 1 || labels[i] > 99) {
            throw LabelRangeError("label " + std::to_string(labels[i]) +
                                  " outside [1, 99]");
        }
        const int cx = static_cast<int>(std::lround(points[i].x));
        const int cy = static_cast<int>(std::lround(points[i].y));
        if (cx < 0 || cx >= img.width || cy < 0 || cy >= img.height) {
            throw PointOutOfBounds("point (" + std::to_string(points[i].x) + ", " +
                                   std::to_string(points[i].y) + ") outside image");
        }
        draw_disc(out, cx, cy, 6);
        draw_label_tag(out, cx, cy, labels[i]);
    }
    return out;
}

ImageBuffer resize_bilinear(const ImageBuffer& img, int out_width, int out_height) {
    require_valid(img);
    if (out_width < 1 || out_height < 1) throw Error("resize target must be >= 1");
    if (out_width == img.width && out_height == img.height) return img;

    ImageBuffer out = ImageBuffer::blank(out_width, out_height);
    const double sx = static_cast<double>(img.width) / out_width;
    const double sy = static_cast<double>(img.height) / out_height;
    for (int y = 0; y < out_height; ++y) {
        // Half-pixel centres, clamped to the source raster (edge replicate).
        double src_y = (y + 0.5) * sy - 0.5;
        src_y = std::clamp(src_y, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(src_y);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double fy = src_y - y0;
        for (int x = 0; x < out_width; ++x) {
            double src_x = (x + 0.5) * sx - 0.5;
            src_x = std::clamp(src_x, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(src_x);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double fx = src_x - x0;
            const std::uint8_t* p00 = img.pixel(x0, y0);
            const std::uint8_t* p10 = img.pixel(x1, y0);
            const std::uint8_t* p01 = img.pixel(x0, y1);
            const std::uint8_t* p11 = img.pixel(x1, y1);
            std::uint8_t* q = out.pixel(x, y);
            for (int ch = 0; ch < 3; ++ch) {
                const double top = p00[ch] + fx * (p10[ch] - p00[ch]);
                const double bot = p01[ch] + fx * (p11[ch] - p01[ch]);
                q[ch] = to_byte(top + fy * (bot - top));
            }
        }
    }
    return out;
}

ImageBuffer flip_horizontal(const ImageBuffer& img) {
    require_valid(img);
    ImageBuffer out = ImageBuffer::blank(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            std::memcpy(out.pixel(x, y), img.pixel(img.width - 1 - x, y), 3);
        }
    }
    return out;
}

}  // namespace sslforge

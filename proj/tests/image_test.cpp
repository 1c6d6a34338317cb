// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/image.hpp"

#include <cmath>
#include <cstring>

#include <doctest.h>

#include "sslforge/errors.hpp"
#include "testutil.hpp"

using namespace sslforge;

TEST_CASE("rotate 90 permutes indices: out(x,y) = in(y, H-1-x)") {
    // 2x3 input (W=2, H=3) becomes 3x2.
    ImageBuffer img = ImageBuffer::blank(2, 3);
    for (int y = 0; y < 3; ++y) {
        for (int x = 0; x < 2; ++x) {
            img.pixel(x, y)[0] = static_cast<std::uint8_t>(10 * y + x);
        }
    }
    const ImageBuffer rot = rotate_cw(img, 90);
    REQUIRE(rot.width == 3);
    REQUIRE(rot.height == 2);
    for (int y = 0; y < rot.height; ++y) {
        for (int x = 0; x < rot.width; ++x) {
            CHECK(rot.pixel(x, y)[0] == img.pixel(y, img.height - 1 - x)[0]);
        }
    }
}

TEST_CASE("rotate 0 is the identity") {
    const ImageBuffer img = testutil::noise_image(17, 9, 5);
    CHECK(rotate_cw(img, 0) == img);
}

TEST_CASE("four quarter turns are the identity, pixel-exact") {
    const ImageBuffer img = testutil::noise_image(31, 22, 8);
    ImageBuffer cur = img;
    for (int i = 0; i < 4; ++i) cur = rotate_cw(cur, 90);
    CHECK(cur == img);
}

TEST_CASE("rotation rejects angles outside the active set") {
    const ImageBuffer img = ImageBuffer::blank(4, 4);
    CHECK_THROWS_AS(rotate_cw(img, 30), InvalidAngle);
    CHECK_THROWS_AS(rotate_cw(img, 360), InvalidAngle);
    CHECK_THROWS_AS(rotate_cw(img, -90), InvalidAngle);
}

TEST_CASE("45-degree rotation expands the canvas and fills corners black") {
    const ImageBuffer img = ImageBuffer::filled(40, 40, {200, 10, 10});
    const ImageBuffer rot = rotate_cw(img, 45);
    const int expect = static_cast<int>(std::ceil(40 * std::sqrt(2.0) - 1e-7));
    CHECK(rot.width == expect);
    CHECK(rot.height == expect);
    // Corners lie outside the rotated square.
    CHECK(rot.pixel(0, 0)[0] == 0);
    CHECK(rot.pixel(0, 0)[1] == 0);
    // Centre keeps the source colour.
    CHECK(rot.pixel(rot.width / 2, rot.height / 2)[0] == 200);
}

TEST_CASE("28x28 mask at the origin changes exactly 784 pixels") {
    const ImageBuffer img = ImageBuffer::filled(64, 64, {200, 10, 10});
    const Region r{0, 0, 28, 28};
    const ImageBuffer masked = mask_region(img, r);
    int changed = 0;
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            if (std::memcmp(masked.pixel(x, y), img.pixel(x, y), 3) != 0) ++changed;
        }
    }
    CHECK(changed == 784);
    const std::uint8_t* inside = masked.pixel(10, 10);
    CHECK(inside[0] == 128);
    CHECK(inside[1] == 128);
    CHECK(inside[2] == 128);
}

TEST_CASE("full-image mask turns everything mid-gray") {
    const ImageBuffer img = testutil::noise_image(16, 12, 3);
    const ImageBuffer masked = mask_region(img, {0, 0, 16, 12});
    CHECK(masked == ImageBuffer::filled(16, 12, {128, 128, 128}));
}

TEST_CASE("crop of the full image is a byte-identical copy") {
    const ImageBuffer img = testutil::noise_image(23, 17, 4);
    CHECK(crop_region(img, {0, 0, 23, 17}) == img);
}

TEST_CASE("1x1 crop picks the single pixel") {
    const ImageBuffer img = testutil::noise_image(9, 9, 6);
    const ImageBuffer c = crop_region(img, {4, 7, 1, 1});
    CHECK(c.width == 1);
    CHECK(c.height == 1);
    CHECK(std::memcmp(c.pixel(0, 0), img.pixel(4, 7), 3) == 0);
}

TEST_CASE("mask leaves the complement untouched; crop of mask is uniform") {
    const ImageBuffer img = testutil::noise_image(50, 50, 7);
    const Region r{10, 20, 28, 28};
    const ImageBuffer masked = mask_region(img, r);
    CHECK(crop_region(masked, r) == ImageBuffer::filled(28, 28, {128, 128, 128}));
    CHECK(crop_region(masked, {0, 0, 50, 20}) == crop_region(img, {0, 0, 50, 20}));
}

TEST_CASE("out-of-bounds regions throw") {
    const ImageBuffer img = ImageBuffer::blank(10, 10);
    CHECK_THROWS_AS(crop_region(img, {5, 5, 6, 2}), RegionOutOfBounds);
    CHECK_THROWS_AS(mask_region(img, {-1, 0, 2, 2}), RegionOutOfBounds);
    CHECK_THROWS_AS(crop_region(img, {0, 0, 0, 1}), RegionOutOfBounds);
}

TEST_CASE("1x1 grid partition is the centre-cropped image") {
    const ImageBuffer img = testutil::noise_image(13, 11, 9);
    const auto patches = partition_grid(img, 1, 1);
    REQUIRE(patches.size() == 1);
    CHECK(patches[0] == img);
}

TEST_CASE("2x2 partition of a 4x4 image gives quadrants") {
    const ImageBuffer img = testutil::noise_image(4, 4, 10);
    const auto patches = partition_grid(img, 2, 2);
    REQUIRE(patches.size() == 4);
    CHECK(patches[0] == crop_region(img, {0, 0, 2, 2}));
    CHECK(patches[1] == crop_region(img, {2, 0, 2, 2}));
    CHECK(patches[2] == crop_region(img, {0, 2, 2, 2}));
    CHECK(patches[3] == crop_region(img, {2, 2, 2, 2}));
}

TEST_CASE("partition then assemble reproduces the centre crop") {
    const ImageBuffer img = testutil::noise_image(50, 38, 11);
    for (const auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{3, 4}}) {
        const auto patches = partition_grid(img, m, n);
        const ImageBuffer back = assemble_grid(patches, m, n);
        const int ph = img.height / m, pw = img.width / n;
        const Region crop{(img.width - pw * n) / 2, (img.height - ph * m) / 2, pw * n,
                          ph * m};
        CHECK(back == crop_region(img, crop));
    }
}

TEST_CASE("partition of a too-small image throws") {
    const ImageBuffer img = ImageBuffer::blank(2, 2);
    CHECK_THROWS_AS(partition_grid(img, 3, 3), ImageTooSmall);
}

TEST_CASE("identity affine map keeps image and points") {
    const ImageBuffer img = testutil::noise_image(20, 20, 12);
    const std::vector<Point2D> pts{{3.5, 4.25}, {10, 10}};
    const AffineResult res = apply_affine(img, pts, AffineMap::identity());
    CHECK(res.image == img);
    CHECK(res.points == pts);
}

TEST_CASE("translation maps points exactly") {
    const ImageBuffer img = ImageBuffer::blank(32, 32);
    const AffineResult res =
        apply_affine(img, {{5, 5}}, AffineMap::translation(10, 0));
    CHECK(res.points[0].x == 15.0);
    CHECK(res.points[0].y == 5.0);
}

TEST_CASE("map then inverse returns points within 1e-9 px") {
    const AffineMap m{1.2, 0.3, -4.0, -0.1, 0.9, 2.5};
    const AffineMap inv = m.inverse();
    sslforge::RandomSource rng(17);
    for (int i = 0; i < 200; ++i) {
        const Point2D p{rng.uniform_real(-50, 50), rng.uniform_real(-50, 50)};
        const Point2D q = inv.apply(m.apply(p));
        CHECK(std::abs(q.x - p.x) < 1e-9);
        CHECK(std::abs(q.y - p.y) < 1e-9);
    }
}

TEST_CASE("singular maps are rejected") {
    const AffineMap degenerate{1, 2, 0, 2, 4, 0};
    CHECK_THROWS_AS(degenerate.inverse(), SingularMap);
    CHECK_THROWS_AS(apply_affine(ImageBuffer::blank(4, 4), {}, degenerate), SingularMap);
}

TEST_CASE("annotating zero points is a no-op") {
    const ImageBuffer img = testutil::noise_image(30, 30, 13);
    CHECK(annotate_points(img, {}, {}) == img);
}

TEST_CASE("one marker paints a red disc at the point") {
    const ImageBuffer img = ImageBuffer::filled(64, 64, {0, 80, 0});
    const ImageBuffer out = annotate_points(img, {{32, 32}}, {3});
    const std::uint8_t* centre = out.pixel(32, 32);
    CHECK(centre[0] == 255);
    CHECK(centre[1] == 0);
    CHECK(centre[2] == 0);
    CHECK(out != img);
}

TEST_CASE("annotation is deterministic") {
    const ImageBuffer img = testutil::noise_image(80, 60, 14);
    const std::vector<Point2D> pts{{20, 20}, {60, 40}};
    const std::vector<int> labels{1, 42};
    CHECK(annotate_points(img, pts, labels) == annotate_points(img, pts, labels));
}

TEST_CASE("annotation rejects bad labels and out-of-image points") {
    const ImageBuffer img = ImageBuffer::blank(32, 32);
    CHECK_THROWS_AS(annotate_points(img, {{5, 5}}, {0}), LabelRangeError);
    CHECK_THROWS_AS(annotate_points(img, {{5, 5}}, {100}), LabelRangeError);
    CHECK_THROWS_AS(annotate_points(img, {{40, 5}}, {1}), PointOutOfBounds);
}

TEST_CASE("resize keeps constant images constant") {
    const ImageBuffer img = ImageBuffer::filled(37, 53, {12, 200, 99});
    const ImageBuffer up = resize_bilinear(img, 100, 40);
    CHECK(up == ImageBuffer::filled(100, 40, {12, 200, 99}));
}

TEST_CASE("horizontal flip is an involution") {
    const ImageBuffer img = testutil::noise_image(21, 14, 15);
    CHECK(flip_horizontal(flip_horizontal(img)) == img);
    CHECK(std::memcmp(flip_horizontal(img).pixel(0, 0), img.pixel(20, 0), 3) == 0);
}

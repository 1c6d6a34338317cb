// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "sslforge/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>

#include <jpeglib.h>
#include <png.h>

#include "sslforge/errors.hpp"

namespace sslforge {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void png_error_handler(png_structp png, png_const_charp) {
    std::longjmp(*static_cast<std::jmp_buf*>(png_get_error_ptr(png)), 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

ImageBuffer load_png(std::FILE* fp, const std::filesystem::path& path) {
    std::jmp_buf jump;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &jump,
                                             png_error_handler, png_warning_handler);
    if (!png) throw DecodeError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("libpng init failed");
    }

    ImageBuffer img;
    std::vector<png_bytep> rows;
    volatile bool failed = false;
    if (setjmp(jump)) {
        failed = true;
    } else {
        png_init_io(png, fp);
        png_read_info(png, info);

        png_set_palette_to_rgb(png);
        png_set_expand_gray_1_2_4_to_8(png);
        if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
        png_set_strip_16(png);
        png_set_strip_alpha(png);
        png_set_gray_to_rgb(png);
        png_read_update_info(png, info);

        const png_uint_32 w = png_get_image_width(png, info);
        const png_uint_32 h = png_get_image_height(png, info);
        if (w < 1 || h < 1 || png_get_channels(png, info) != 3 ||
            png_get_bit_depth(png, info) != 8) {
            longjmp(jump, 1);
        }
        img = ImageBuffer::blank(static_cast<int>(w), static_cast<int>(h));
        rows.resize(h);
        for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.pixel(0, static_cast<int>(y));
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
    }
    png_destroy_read_struct(&png, &info, nullptr);
    if (failed) throw DecodeError("corrupt or unsupported PNG: " + path.string());
    return img;
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

[[noreturn]] void jpeg_error_exit(j_common_ptr cinfo) {
    std::longjmp(reinterpret_cast<JpegErrorMgr*>(cinfo->err)->jump, 1);
}

ImageBuffer load_jpeg(std::FILE* fp, const std::filesystem::path& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;

    ImageBuffer img;
    volatile bool failed = false;
    jpeg_create_decompress(&cinfo);
    if (setjmp(err.jump)) {
        failed = true;
    } else {
        jpeg_stdio_src(&cinfo, fp);
        jpeg_read_header(&cinfo, TRUE);
        cinfo.out_color_space = JCS_RGB;
        jpeg_start_decompress(&cinfo);
        if (cinfo.output_components != 3 || cinfo.output_width < 1 ||
            cinfo.output_height < 1) {
            longjmp(err.jump, 1);
        }
        img = ImageBuffer::blank(static_cast<int>(cinfo.output_width),
                                 static_cast<int>(cinfo.output_height));
        while (cinfo.output_scanline < cinfo.output_height) {
            JSAMPROW row = img.pixel(0, static_cast<int>(cinfo.output_scanline));
            jpeg_read_scanlines(&cinfo, &row, 1);
        }
        jpeg_finish_decompress(&cinfo);
    }
    jpeg_destroy_decompress(&cinfo);
    if (failed) throw DecodeError("corrupt or unsupported JPEG: " + path.string());
    return img;
}

}  // namespace

ImageBuffer load_image(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + path.string());

    unsigned char magic[8] = {0};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), fp.get());
    std::rewind(fp.get());
    if (got >= 8 && png_sig_cmp(magic, 0, 8) == 0) return load_png(fp.get(), path);
    if (got >= 2 && magic[0] == 0xFF && magic[1] == 0xD8) return load_jpeg(fp.get(), path);
    throw DecodeError("not a PNG or JPEG file: " + path.string());
}

void save_image(const ImageBuffer& img, const std::filesystem::path& path) {
    if (img.width < 1 || img.height < 1 ||
        img.data.size() != img.pixel_count() * 3) {
        throw Error("malformed ImageBuffer");
    }
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw IoError("cannot open " + path.string() + " for writing");

    std::jmp_buf jump;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &jump,
                                              png_error_handler, png_warning_handler);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng init failed");
    }

    std::vector<png_const_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = img.pixel(0, y);

    volatile bool failed = false;
    if (setjmp(jump)) {
        failed = true;
    } else {
        png_init_io(png, fp.get());
        // Fixed compression parameters keep the byte stream reproducible.
        png_set_compression_level(png, 4);
        png_set_filter(png, 0, PNG_FILTER_SUB);
        png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                     static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
                     PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                     PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        png_write_rows(png, const_cast<png_bytepp>(rows.data()),
                       static_cast<png_uint_32>(img.height));
        png_write_end(png, nullptr);
    }
    png_destroy_write_struct(&png, &info);
    if (failed || std::fflush(fp.get()) != 0) {
        throw IoError("failed writing " + path.string());
    }
}

std::vector<std::uint8_t> encode_png(const ImageBuffer& img) {
    // Small helper for --embed mode: route save_image through a temp-less
    // in-memory sink via libpng's custom write callback.
    struct Sink {
        std::vector<std::uint8_t> bytes;
    } sink;

    std::jmp_buf jump;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &jump,
                                              png_error_handler, png_warning_handler);
    if (!png) throw Error("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("libpng init failed");
    }

    std::vector<png_const_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = img.pixel(0, y);

    volatile bool failed = false;
    if (setjmp(jump)) {
        failed = true;
    } else {
        png_set_write_fn(
            png, &sink,
            [](png_structp p, png_bytep data, png_size_t len) {
                auto* s = static_cast<Sink*>(png_get_io_ptr(p));
                s->bytes.insert(s->bytes.end(), data, data + len);
            },
            [](png_structp) {});
        png_set_compression_level(png, 4);
        png_set_filter(png, 0, PNG_FILTER_SUB);
        png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                     static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
                     PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                     PNG_FILTER_TYPE_DEFAULT);
        png_write_info(png, info);
        png_write_rows(png, const_cast<png_bytepp>(rows.data()),
                       static_cast<png_uint_32>(img.height));
        png_write_end(png, nullptr);
    }
    png_destroy_write_struct(&png, &info);
    if (failed) throw Error("in-memory PNG encode failed");
    return std::move(sink.bytes);
}

}  // namespace sslforge

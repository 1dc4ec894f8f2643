#include "regent/image.hpp"

#include <jpeglib.h>
#include <png.h>

#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

namespace regent {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw IoError("cannot open '" + path + "'");
  return f;
}

// ---- PPM (binary P6, maxval 255) ----

int ppm_next_token(std::FILE* f, std::string& tok) {
  tok.clear();
  int c = std::fgetc(f);
  while (c != EOF) {
    if (c == '#') {  // comment runs to end of line
      while (c != EOF && c != '\n') c = std::fgetc(f);
    } else if (std::isspace(c)) {
      c = std::fgetc(f);
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = std::fgetc(f);
  }
  return c;  // the whitespace (or EOF) that ended the token
}

Rgb8Image load_ppm(std::FILE* f, const std::string& path) {
  std::string tok;
  ppm_next_token(f, tok);
  if (tok != "P6") throw DecodeError("'" + path + "': not a binary PPM (P6)");
  long vals[3];
  for (long& v : vals) {
    ppm_next_token(f, tok);
    try {
      v = std::stol(tok);
    } catch (...) {
      throw DecodeError("'" + path + "': malformed PPM header");
    }
  }
  if (vals[0] < 1 || vals[1] < 1) throw DecodeError("'" + path + "': bad PPM dimensions");
  if (vals[2] != 255) throw DecodeError("'" + path + "': unsupported PPM maxval (want 255)");
  Rgb8Image img(vals[0], vals[1]);
  if (std::fread(img.data.data(), 1, img.data.size(), f) != img.data.size())
    throw DecodeError("'" + path + "': truncated PPM pixel data");
  return img;
}

// ---- PNG ----

Rgb8Image load_png_file(std::FILE* f, const std::string& path) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw DecodeError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw DecodeError("libpng init failed");
  }
  Rgb8Image img;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DecodeError("'" + path + "': corrupt or truncated PNG");
  }
  png_init_io(png, f);
  png_read_info(png, info);

  // normalize every variant to 8-bit RGB
  png_byte color = png_get_color_type(png, info);
  png_byte depth = png_get_bit_depth(png, info);
  if (depth == 16) png_set_strip_16(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  img.width = static_cast<Eigen::Index>(png_get_image_width(png, info));
  img.height = static_cast<Eigen::Index>(png_get_image_height(png, info));
  img.data.assign(static_cast<std::size_t>(3 * img.width * img.height), 0);
  rows.resize(static_cast<std::size_t>(img.height));
  for (Eigen::Index y = 0; y < img.height; ++y)
    rows[static_cast<std::size_t>(y)] = img.data.data() + 3 * y * img.width;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

// ---- JPEG ----

struct JpegError {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegError*>(cinfo->err);
  std::longjmp(err->jump, 1);
}

Rgb8Image load_jpeg_file(std::FILE* f, const std::string& path) {
  jpeg_decompress_struct cinfo;
  JpegError jerr;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = jpeg_error_exit;
  if (setjmp(jerr.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw DecodeError("'" + path + "': corrupt or truncated JPEG");
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, f);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  Rgb8Image img(static_cast<Eigen::Index>(cinfo.output_width),
                static_cast<Eigen::Index>(cinfo.output_height));
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = img.data.data() + 3 * img.width * cinfo.output_scanline;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

}  // namespace

Rgb8Image load_rgb8(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  unsigned char magic[8] = {0};
  std::size_t got = std::fread(magic, 1, sizeof(magic), f.get());
  std::rewind(f.get());
  if (got >= 8 && std::memcmp(magic, "\x89PNG\r\n\x1a\n", 8) == 0)
    return load_png_file(f.get(), path);
  if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF)
    return load_jpeg_file(f.get(), path);
  if (got >= 2 && magic[0] == 'P' && magic[1] == '6') return load_ppm(f.get(), path);
  throw DecodeError("'" + path + "': unsupported image format (want PNG, JPEG, or PPM P6)");
}

void save_png(const std::string& path, const Rgb8Image& img) {
  if (img.width < 1 || img.height < 1) throw ArgumentError("save_png: empty image");
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed writing '" + path + "'");
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
               static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (Eigen::Index y = 0; y < img.height; ++y)
    png_write_row(png, const_cast<png_bytep>(img.data.data() + 3 * y * img.width));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void save_ppm(const std::string& path, const Rgb8Image& img) {
  if (img.width < 1 || img.height < 1) throw ArgumentError("save_ppm: empty image");
  FilePtr f = open_file(path, "wb");
  std::string header =
      "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size() ||
      std::fwrite(img.data.data(), 1, img.data.size(), f.get()) != img.data.size())
    throw IoError("failed writing '" + path + "'");
}

}  // namespace regent

#pragma once

// Binary P6 PPM I/O split into colour planes, and Bio-SNOW image encryption.

#include <cctype>
#include <utility>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dnacrypt/biosnow.hpp"
#include "dnacrypt/bits.hpp"
#include "dnacrypt/error.hpp"

namespace dnacrypt::image {

struct ImagePlanes {
  std::size_t width = 0;
  std::size_t height = 0;
  Bytes r, g, b;  // row-major, width*height each
  // Verbatim header bytes from load_ppm (comments, spacing); empty for
  // images built in memory, which get the canonical header.
  std::string header;

  std::size_t pixels() const noexcept { return width * height; }
  friend bool operator==(const ImagePlanes&, const ImagePlanes&) = default;
};

namespace detail {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(data_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= data_.size() || !std::isdigit(data_[pos_])) {
      throw FormatError(std::string("PPM: malformed header, expected ") + what);
    }
    std::size_t v = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      v = v * 10 + static_cast<std::size_t>(data_[pos_++] - '0');
      if (v > (std::size_t{1} << 32)) throw FormatError(std::string("PPM: ") + what + " too large");
    }
    return v;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance() noexcept { ++pos_; }
  std::span<const std::uint8_t> data() const noexcept { return data_; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ImagePlanes load_ppm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || data[1] != '6') throw FormatError("PPM: missing P6 magic");
  detail::HeaderReader in(data.subspan(2));
  ImagePlanes img;
  img.width = in.number("width");
  img.height = in.number("height");
  const std::size_t maxval = in.number("maxval");
  if (maxval != 255) throw FormatError("PPM: maxval must be 255, got " + std::to_string(maxval));
  if (in.pos() >= in.data().size() || !std::isspace(in.data()[in.pos()])) {
    throw FormatError("PPM: malformed header, expected whitespace after maxval");
  }
  in.advance();
  img.header.assign(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(2 + in.pos()));
  const auto pixels = in.data().subspan(in.pos());
  if (img.width != 0 && img.height > pixels.size() / img.width) {
    throw FormatError("PPM: truncated pixel data for " + std::to_string(img.width) + "x" +
                      std::to_string(img.height));
  }
  const std::size_t n = img.width * img.height;
  if (pixels.size() < 3 * n) {
    throw FormatError("PPM: truncated pixel data, expected " + std::to_string(3 * n) + " bytes, got " +
                      std::to_string(pixels.size()));
  }
  img.r.resize(n);
  img.g.resize(n);
  img.b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    img.r[i] = pixels[3 * i];
    img.g[i] = pixels[3 * i + 1];
    img.b[i] = pixels[3 * i + 2];
  }
  return img;
}

inline void validate(const ImagePlanes& img) {
  const std::size_t n = img.pixels();
  if (img.r.size() != n || img.g.size() != n || img.b.size() != n) {
    throw ContractError("image planes do not match width*height");
  }
}

// Reuses the loaded header when it still describes the planes, otherwise
// writes "P6\n<w> <h>\n255\n". Bytes after the pixel data are not kept.
inline Bytes save_ppm(const ImagePlanes& img) {
  validate(img);
  std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  if (!img.header.empty()) {
    try {
      const Bytes probe(img.header.begin(), img.header.end());
      detail::HeaderReader in(std::span<const std::uint8_t>(probe).subspan(2));
      if (probe.size() > 2 && probe[0] == 'P' && probe[1] == '6' && in.number("width") == img.width &&
          in.number("height") == img.height) {
        header = img.header;
      }
    } catch (const FormatError&) {
    }
  }
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + 3 * img.pixels());
  for (std::size_t i = 0; i < img.pixels(); ++i) {
    out.push_back(img.r[i]);
    out.push_back(img.g[i]);
    out.push_back(img.b[i]);
  }
  return out;
}

// One keystream for the whole image: red plane, then green, then blue, each
// row-major; every sample is XORed with the next four keystream quads packed
// into a byte. Consumes 12 * width * height quads. Self-inverse.
inline ImagePlanes encrypt_image(ImagePlanes img, const biosnow::KeyIv& kiv, std::uint64_t* quads_consumed = nullptr) {
  validate(img);
  biosnow::Keystream ks(kiv);
  for (Bytes* plane : {&img.r, &img.g, &img.b}) {
    for (auto& v : *plane) v ^= ks.next_byte();
  }
  if (quads_consumed) *quads_consumed = ks.quads_consumed();
  return img;
}

inline ImagePlanes decrypt_image(ImagePlanes img, const biosnow::KeyIv& kiv, std::uint64_t* quads_consumed = nullptr) {
  return encrypt_image(std::move(img), kiv, quads_consumed);
}

}  // namespace dnacrypt::image

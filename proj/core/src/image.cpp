#include "cavlab/image.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "cavlab/errors.hpp"

namespace cavlab {

Tensor Image::as_row() const {
  return Tensor({1, size()}, pixels);
}

Image Image::from_row(const Tensor& row, int width, int height) {
  if (row.size() != static_cast<std::size_t>(width) * height)
    throw ContractViolation("Image::from_row: size mismatch");
  Image img(width, height);
  std::copy(row.values().begin(), row.values().end(), img.pixels.begin());
  return img;
}

std::size_t Mask::area() const {
  std::size_t n = 0;
  for (std::uint8_t v : on) n += v != 0;
  return n;
}

namespace {

std::uint8_t quantize(float v) {
  if (v < 0.0f) v = 0.0f;
  if (v > 1.0f) v = 1.0f;
  return static_cast<std::uint8_t>(std::lround(255.0f * v));
}

// Reads one PGM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

struct PgmData {
  int width = 0, height = 0;
  std::vector<std::uint8_t> bytes;
};

PgmData read_p5(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractViolation("cannot open PGM file: " + path.string());
  if (next_token(in) != "P5")
    throw ContractViolation("not a binary P5 PGM: " + path.string());
  PgmData d;
  try {
    d.width = std::stoi(next_token(in));
    d.height = std::stoi(next_token(in));
    const int maxval = std::stoi(next_token(in));
    if (maxval != 255)
      throw ContractViolation("unsupported PGM maxval in " + path.string());
  } catch (const std::logic_error&) {
    throw ContractViolation("malformed PGM header: " + path.string());
  }
  if (d.width <= 0 || d.height <= 0)
    throw ContractViolation("malformed PGM dimensions: " + path.string());
  d.bytes.resize(static_cast<std::size_t>(d.width) * d.height);
  in.read(reinterpret_cast<char*>(d.bytes.data()),
          static_cast<std::streamsize>(d.bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(d.bytes.size()))
    throw ContractViolation("truncated PGM payload: " + path.string());
  return d;
}

void write_p5(const std::filesystem::path& path, int width, int height,
              const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ContractViolation("cannot write PGM file: " + path.string());
  char header[64];
  const int len = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", width, height);
  out.write(header, len);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ContractViolation("write failed: " + path.string());
}

}  // namespace

void write_pgm(const std::filesystem::path& path, const Image& img) {
  std::vector<std::uint8_t> bytes(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) bytes[i] = quantize(img.pixels[i]);
  write_p5(path, img.width, img.height, bytes);
}

Image read_pgm(const std::filesystem::path& path) {
  const PgmData d = read_p5(path);
  Image img(d.width, d.height);
  for (std::size_t i = 0; i < d.bytes.size(); ++i)
    img.pixels[i] = static_cast<float>(d.bytes[i]) / 255.0f;
  return img;
}

void write_mask_pgm(const std::filesystem::path& path, const Mask& mask) {
  std::vector<std::uint8_t> bytes(mask.on.size());
  for (std::size_t i = 0; i < mask.on.size(); ++i) bytes[i] = mask.on[i] ? 255 : 0;
  write_p5(path, mask.width, mask.height, bytes);
}

Mask read_mask_pgm(const std::filesystem::path& path) {
  const PgmData d = read_p5(path);
  Mask m(d.width, d.height);
  for (std::size_t i = 0; i < d.bytes.size(); ++i) m.on[i] = d.bytes[i] >= 128 ? 1 : 0;
  return m;
}

}  // namespace cavlab

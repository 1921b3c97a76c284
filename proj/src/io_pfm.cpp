#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "humrec/io.hpp"

namespace humrec {

namespace {

bool host_is_little_endian() {
  const uint16_t one = 1;
  return *reinterpret_cast<const uint8_t*>(&one) == 1;
}

// PFM stores rows bottom-to-top; scale -1.0 marks little-endian data.
void write_pfm_raw(const std::string& path, int w, int h, int channels, const float* data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_pfm: cannot open " + path);
  f << (channels == 3 ? "PF" : "Pf") << "\n" << w << " " << h << "\n" << "-1.0" << "\n";
  std::vector<float> row(static_cast<size_t>(w) * channels);
  for (int y = h - 1; y >= 0; --y) {
    std::memcpy(row.data(), data + static_cast<size_t>(y) * w * channels, row.size() * 4);
    if (!host_is_little_endian())
      for (float& v : row) {
        uint32_t u;
        std::memcpy(&u, &v, 4);
        u = __builtin_bswap32(u);
        std::memcpy(&v, &u, 4);
      }
    f.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size() * 4));
  }
  if (!f) throw std::runtime_error("write_pfm: write failed for " + path);
}

void read_pfm_raw(const std::string& path, int expect_channels, int& w, int& h,
                  std::vector<float>& data) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_pfm: cannot open " + path);
  std::string magic;
  double scale = 0.0;
  f >> magic >> w >> h >> scale;
  f.get();  // single whitespace before the raster
  const int channels = magic == "PF" ? 3 : magic == "Pf" ? 1 : 0;
  if (channels == 0) throw std::runtime_error("read_pfm: bad magic in " + path);
  if (channels != expect_channels)
    throw std::runtime_error("read_pfm: channel mismatch in " + path);
  if (w <= 0 || h <= 0) throw std::runtime_error("read_pfm: bad dimensions in " + path);
  const bool file_le = scale < 0.0;
  data.assign(static_cast<size_t>(w) * h * channels, 0.0f);
  std::vector<float> row(static_cast<size_t>(w) * channels);
  for (int y = h - 1; y >= 0; --y) {
    f.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size() * 4));
    if (!f) throw std::runtime_error("read_pfm: truncated file " + path);
    if (file_le != host_is_little_endian())
      for (float& v : row) {
        uint32_t u;
        std::memcpy(&u, &v, 4);
        u = __builtin_bswap32(u);
        std::memcpy(&v, &u, 4);
      }
    std::memcpy(data.data() + static_cast<size_t>(y) * w * channels, row.data(), row.size() * 4);
  }
}

}  // namespace

void write_pfm(const std::string& path, const DepthMap& d) {
  write_pfm_raw(path, d.width, d.height, 1, d.data.data());
}

void write_pfm(const std::string& path, const MaskMap& m) {
  write_pfm_raw(path, m.width, m.height, 1, m.data.data());
}

void write_pfm(const std::string& path, const NormalMap& n) {
  write_pfm_raw(path, n.width, n.height, 3, n.data.data());
}

DepthMap read_pfm_depth(const std::string& path) {
  DepthMap d;
  read_pfm_raw(path, 1, d.width, d.height, d.data);
  return d;
}

MaskMap read_pfm_mask(const std::string& path) {
  MaskMap m;
  read_pfm_raw(path, 1, m.width, m.height, m.data);
  return m;
}

NormalMap read_pfm_normal(const std::string& path) {
  NormalMap n;
  read_pfm_raw(path, 3, n.width, n.height, n.data);
  return n;
}

}  // namespace humrec

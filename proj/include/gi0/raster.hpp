#pragma once

#include <string>
#include <vector>

#include "gi0/estimators.hpp"

namespace gi0 {

/// Row-major single-band intensity raster. NaN pixels mark nodata.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<float> pixels;

    float& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    float at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

/// Writes a JSON sidecar (width, height, dtype "f32le", nodata "nan",
/// payload name) plus a raw little-endian float32 payload next to it.
void write_raster(const RasterImage& img, const std::string& sidecar_path);

/// Reads either a sidecar ("*.json") or a plain-text matrix (whitespace
/// separated rows, '#' comments). Format errors carry byte offsets.
RasterImage read_raster(const std::string& path);

/// Sliding-window roughness map: for every pixel whose full window lies
/// inside the image, estimates alpha from the window values; edge pixels and
/// failed windows get NaN. Window side must be odd, between 3 and 11.
RasterImage roughness_map(const RasterImage& input, int window, double looks,
                          Estimator estimator = Estimator::triangular,
                          Kernel kernel = Kernel::inverse_gaussian,
                          unsigned parallelism = 1);

}  // namespace gi0

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ridgenet/grid.hpp"
#include "ridgenet/radon.hpp"
#include "ridgenet/ridgelet.hpp"

namespace ridgenet {

/// Round-trip formatting of a double (17 significant digits).
std::string format_double(double v);

/// "x,value" rows.
void write_signal_csv(const std::filesystem::path& path, const SampledSignal& s);
SampledSignal read_signal_csv(const std::filesystem::path& path);

/// "x,y,value" rows, x fastest.
void write_image_csv(const std::filesystem::path& path, const SampledImage& img);
SampledImage read_image_csv(const std::filesystem::path& path);

/// Binary P5, 8 bit, min-max normalized (a constant image maps to 0).
void write_pgm(const std::filesystem::path& path, std::span<const double> values, std::size_t width,
               std::size_t height);
void write_pgm(const std::filesystem::path& path, const SampledImage& img);
/// Reads P5 (maxval <= 255) onto the pixel-center grid of [-1, 1]^2, values in [0, 1].
SampledImage read_pgm(const std::filesystem::path& path);

/// "a[,a2],b,re,im" rows in the grid's lexicographic order.
void write_coefficients_csv(const std::filesystem::path& path, const RidgeletCoefficients& T);

/// "angle,offset,value" rows.
void write_sinogram_csv(const std::filesystem::path& path, const Sinogram& s);

/// Header `ridgenet-v1 m=<m> eta=<name> K=<re>,<im>` (plus `width=<eps>` for
/// mollified deltas), then one `a_1 .. a_m b c_re c_im` line per unit.
void write_network(const std::filesystem::path& path, const NetworkDescription& net);
NetworkDescription read_network(const std::filesystem::path& path);

using MetricValue = std::variant<double, long long, std::string, bool>;
using Metrics = std::vector<std::pair<std::string, MetricValue>>;

/// Flat JSON object, `"schema": 1` first, floats with 17 significant digits.
void write_metrics_json(const std::filesystem::path& path, const Metrics& metrics);
std::string metrics_json(const Metrics& metrics);

}  // namespace ridgenet

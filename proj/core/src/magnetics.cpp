#include "skinstretch/magnetics.hpp"

#include <cmath>
#include <stdexcept>

namespace skinstretch {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kMu0 = 4.0 * kPi * 1.0e-7;
constexpr std::int32_t kAdcMax = (1 << 18) - 1;  // 19-bit signed converter
}  // namespace

void MagnetSpec::validate() const {
    if (!(radius_m > 0.0) || !(height_m > 0.0) || !(remanence_t > 0.0)) {
        throw std::invalid_argument("magnet spec: radius, height and remanence must be positive");
    }
}

void MagnetometerSpec::validate() const {
    if (!(air_gap_m > 0.0)) {
        throw std::invalid_argument("magnetometer spec: air gap must be positive");
    }
    if (!(full_scale_ut > 0.0)) {
        throw std::invalid_argument("magnetometer spec: full scale must be positive");
    }
    if (noise_sd_ut < 0.0) {
        throw std::invalid_argument("magnetometer spec: noise sd must be non-negative");
    }
    if (!(read_time_s > 0.0)) {
        throw std::invalid_argument("magnetometer spec: read time must be positive");
    }
    for (const BitWindow& w : window) {
        if (w.low < 0 || w.high > 18 || w.width() != 16) {
            throw std::invalid_argument("magnetometer spec: each bit window must select 16 bits of the 19-bit converter");
        }
    }
}

double MagnetometerSpec::lsb_ut(int axis) const {
    return full_scale_ut / 32768.0 * static_cast<double>(1 << window[static_cast<std::size_t>(axis)].low);
}

double magnetic_moment(const MagnetSpec& spec) {
    spec.validate();
    const double volume = kPi * spec.radius_m * spec.radius_m * spec.height_m;
    return spec.remanence_t * volume / kMu0;
}

Vec3 dipole_field_posed_ut(const Vec3& magnet_center_m, const Vec3& moment_axis,
                           const MagnetSpec& magnet) {
    const Vec3 r = -magnet_center_m;  // dipole to field point (the die sits at the origin)
    const double dist = r.norm();
    if (!(dist > kMinDipoleSeparationM)) {
        throw std::domain_error("dipole field: magnet pose degenerate, separation below minimum");
    }
    const Vec3 u = r / dist;
    const double m = magnetic_moment(magnet);
    const double m_dot_u = moment_axis.dot(u);
    const double scale = kMu0 / (4.0 * kPi) * m / (dist * dist * dist);
    const Vec3 field_t = (u * (3.0 * m_dot_u) - moment_axis) * scale;
    return field_t * 1.0e6;  // tesla -> microtesla
}

Vec3 dipole_field_ut(const Vec3& magnet_displacement_m, const MagnetometerSpec& sensor,
                     const MagnetSpec& magnet) {
    if (!magnet_displacement_m.finite()) {
        throw std::invalid_argument("dipole field: non-finite magnet displacement");
    }
    const double rest_height = sensor.air_gap_m + 0.5 * magnet.height_m;
    const Vec3 center{magnet_displacement_m.x, magnet_displacement_m.y,
                      rest_height + magnet_displacement_m.z};
    return dipole_field_posed_ut(center, Vec3{0.0, 0.0, 1.0}, magnet);
}

FieldReading quantize(const Vec3& field_ut, const MagnetometerSpec& sensor,
                      std::mt19937_64& rng) {
    if (!field_ut.finite()) {
        throw std::invalid_argument("quantize: non-finite field");
    }
    FieldReading out;
    out.field_ut = field_ut;
    const double adc_lsb = sensor.full_scale_ut / 32768.0;  // bit-0 weight
    for (int axis = 0; axis < 3; ++axis) {
        double f = field_ut[static_cast<std::size_t>(axis)];
        if (sensor.noise_sd_ut > 0.0) {
            f += std::normal_distribution<double>(0.0, sensor.noise_sd_ut)(rng);
        }
        double raw = std::nearbyint(f / adc_lsb);
        if (raw > kAdcMax) raw = kAdcMax;
        if (raw < -kAdcMax) raw = -kAdcMax;
        // Arithmetic shift drops the bits below the window (floor division).
        std::int32_t windowed = static_cast<std::int32_t>(raw) >> sensor.window[static_cast<std::size_t>(axis)].low;
        if (windowed > 32767) {
            windowed = 32767;
            out.saturated = true;
        } else if (windowed < -32768) {
            windowed = -32768;
            out.saturated = true;
        }
        out.counts[static_cast<std::size_t>(axis)] = windowed;
    }
    return out;
}

}  // namespace skinstretch

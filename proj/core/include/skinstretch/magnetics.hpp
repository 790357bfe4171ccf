// Field model of the sensing magnet and the magnetometer front end.
//
// A cylindrical magnet sits in the elastomer above a three-axis magnetometer.
// The magnet is treated as a point dipole at the cylinder centre, magnetized
// along +Z. Fields are expressed in microtesla at module boundaries; geometry
// is in metres.
#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "skinstretch/vec3.hpp"

namespace skinstretch {

// Moving the magnet closer than this to the sensing die is a modelling error,
// not a representable pose.
inline constexpr double kMinDipoleSeparationM = 1.0e-4;

struct MagnetSpec {
    double radius_m = 1.5e-3;
    double height_m = 1.0e-3;
    double remanence_t = 1.4;
    // Magnetization axis is fixed to +Z.

    void validate() const;
};

// Inclusive bit range selected out of the 19-bit converter, LSB-first.
// The window must span exactly 16 bits; raising `low` by one halves the
// resolution and doubles the representable range on that axis.
struct BitWindow {
    int low = 0;
    int high = 15;
    int width() const { return high - low + 1; }
};

struct MagnetometerSpec {
    double air_gap_m = 3.5e-3;          // die to magnet underside
    double full_scale_ut = 20000.0;     // field that saturates a low=0 window
    std::array<BitWindow, 3> window{BitWindow{0, 15}, BitWindow{0, 15}, BitWindow{1, 16}};
    double noise_sd_ut = 2.0;           // additive white Gaussian per axis
    double read_time_s = 1.55e-3;

    void validate() const;

    // Field step of one output count on the given axis.
    double lsb_ut(int axis) const;
};

struct FieldReading {
    Vec3 field_ut;                       // noiseless field presented to the ADC
    std::array<std::int32_t, 3> counts{0, 0, 0};
    bool saturated = false;
};

// Dipole moment from remanence and cylinder volume, A.m^2.
double magnetic_moment(const MagnetSpec& spec);

// Field at the magnetometer when the magnet centre is displaced by
// `magnet_displacement_m` from its rest pose (rest: centred laterally,
// air gap + height/2 above the die). Throws std::domain_error on a
// degenerate pose.
Vec3 dipole_field_ut(const Vec3& magnet_displacement_m,
                     const MagnetometerSpec& sensor,
                     const MagnetSpec& magnet);

// General pose: magnet centre at `magnet_center_m` relative to the die,
// moment along unit vector `moment_axis`. Used for torsional disturbances.
Vec3 dipole_field_posed_ut(const Vec3& magnet_center_m,
                           const Vec3& moment_axis,
                           const MagnetSpec& magnet);

// ADC model: add Gaussian noise, scale to converter counts, extract the
// per-axis bit window and saturate at its signed 16-bit bounds.
FieldReading quantize(const Vec3& field_ut, const MagnetometerSpec& sensor,
                      std::mt19937_64& rng);

}  // namespace skinstretch

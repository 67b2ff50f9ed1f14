#pragma once

#include <filesystem>
#include <iosfwd>

#include "wiener/field.hpp"

namespace wiener {

/// CSV with header k1,k2,k3,component,re,im; one row per mode per component,
/// modes in storage order, integer wave indices, values printed with 17
/// significant digits.
void write_spectral_csv(std::ostream& os, const SpectralField& c);
SpectralField read_spectral_csv(std::istream& is, const GridSpec& grid, Rank rank);

/// Writes `<stem>.bin` (little-endian float64, component-major, x1-fastest)
/// and `<stem>.json` naming the grid, rank and units.
void write_raw(const std::filesystem::path& stem, const PhysicalField& v);
PhysicalField read_raw(const std::filesystem::path& stem);

}  // namespace wiener

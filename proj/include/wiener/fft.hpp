#pragma once

#include <span>

#include "wiener/vec3.hpp"

namespace wiener::fft {

/// In-place unnormalised 3D DFT of an n^3 array in x1-fastest order.
/// sign = -1 computes Σ_x a(x) e^{-2πi k·x/n}; sign = +1 the conjugate sum.
/// Plans are created once per (n, sign) and shared; execution is thread-safe.
void transform(std::span<Complex> data, int n, int sign);

}  // namespace wiener::fft

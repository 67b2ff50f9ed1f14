#include "wiener/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "wiener/error.hpp"

namespace wiener::fft {

namespace {

struct PlanCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are made on a scratch buffer with FFTW_UNALIGNED so any
// std::vector<Complex> storage can be passed to fftw_execute_dft.
fftw_plan plan_for(int n, int sign) {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto it = c.plans.find({n, sign});
  if (it != c.plans.end()) return it->second;
  std::vector<Complex> scratch(static_cast<std::size_t>(n) * n * n);
  auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_3d(n, n, n, p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw Error("fftw: planning failed for n = " + std::to_string(n));
  c.plans.emplace(std::make_pair(n, sign), plan);
  return plan;
}

}  // namespace

void transform(std::span<Complex> data, int n, int sign) {
  if (data.size() != static_cast<std::size_t>(n) * n * n) throw InvalidInput("fft::transform: size is not n^3");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  // FFTW's row-major n0 x n1 x n2 layout has the last index fastest, which is
  // our x1; the DFT is symmetric in the axes so no reordering is needed.
  fftw_execute_dft(plan_for(n, sign), p, p);
}

}  // namespace wiener::fft

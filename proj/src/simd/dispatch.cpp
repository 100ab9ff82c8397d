#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwcarp/simd/kernels.hpp"

namespace mwcarp::simd {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(MWCARP_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::span<const Isa> available_isas() {
  static const std::vector<Isa> isas = [] {
    std::vector<Isa> out;
    for (Isa isa : {Isa::kScalar, Isa::kAvx2}) {
      if (available(isa)) out.push_back(isa);
    }
    return out;
  }();
  return isas;
}

const KernelTable& kernels(Isa isa) {
  if (!available(isa)) {
    throw std::invalid_argument(std::string("SIMD kernels unavailable: ") + to_string(isa));
  }
  switch (isa) {
    case Isa::kScalar:
      return detail::kScalarTable;
    case Isa::kAvx2:
#if defined(MWCARP_BUILD_AVX2)
      return detail::kAvx2Table;
#else
      break;
#endif
  }
  return detail::kScalarTable;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* pinned = std::getenv("MWCARP_ISA");
    if (pinned != nullptr && std::strcmp(pinned, "scalar") == 0) return kernels(Isa::kScalar);
    return kernels(available_isas().back());
  }();
  return table;
}

}  // namespace mwcarp::simd

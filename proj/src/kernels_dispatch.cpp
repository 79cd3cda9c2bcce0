#include "asa/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace asa::kernels {

bool avx2_available() {
#if defined(ASA_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

namespace {

const Table& select() {
  if (const char* env = std::getenv("ASA_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
    return scalar_table();
  }
#if defined(ASA_WITH_AVX2)
  if (avx2_available()) return avx2_table();
#endif
  return scalar_table();
}

}  // namespace

const Table& active() {
  static const Table& table = select();
  return table;
}

}  // namespace asa::kernels

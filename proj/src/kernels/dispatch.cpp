#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sgcov/kernels.hpp"

namespace sgcov::kernels {

#ifndef SGCOV_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(SGCOV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

bool available(Backend backend) {
  return backend == Backend::scalar || (avx2_table() != nullptr && cpu_has_avx2());
}

Backend initial_backend() {
  if (const char* env = std::getenv("SGCOV_KERNELS")) {
    const std::string name(env);
    if (name == "scalar") return Backend::scalar;
    if (name == "avx2" && available(Backend::avx2)) return Backend::avx2;
  }
  return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

const KernelTable& active() {
  return current().load() == Backend::avx2 ? *avx2_table() : scalar_table();
}

Backend active_backend() { return current().load(); }

std::string_view backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(Backend backend) {
  if (!available(backend))
    throw std::runtime_error("kernel backend not available: " + std::string(backend_name(backend)));
  current().store(backend);
}

}  // namespace sgcov::kernels

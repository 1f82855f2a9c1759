#include "reflact/kernels.hpp"

#include <omp.h>

namespace reflact {
namespace {

std::int64_t trace_one(const OSAlgebra& os, int k, const int* perm, const std::vector<char>* flat_mask) {
  const auto& basis = os.nbc_basis(k);
  std::int64_t t = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (flat_mask && !(*flat_mask)[os.nbc_flat(k, static_cast<int>(j))]) continue;
    for (const auto& [idx, v] : os.straighten_image(perm, basis[j]))
      if (idx == static_cast<int>(j)) t += v;
  }
  return t;
}

int g_threads = 0;

}  // namespace

std::vector<std::int64_t> traces_serial(const OSAlgebra& os, int k, const std::vector<const int*>& perms,
                                        const std::vector<char>* flat_mask) {
  std::vector<std::int64_t> out(perms.size());
  for (std::size_t g = 0; g < perms.size(); ++g) out[g] = trace_one(os, k, perms[g], flat_mask);
  return out;
}

std::vector<std::int64_t> traces_parallel(const OSAlgebra& os, int k, const std::vector<const int*>& perms,
                                          const std::vector<char>* flat_mask) {
  os.nbc_basis(k);  // build the table before the threads start
  std::vector<std::int64_t> out(perms.size());
  const long n = static_cast<long>(perms.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long g = 0; g < n; ++g) out[g] = trace_one(os, k, perms[g], flat_mask);
  return out;
}

std::vector<std::int64_t> traces(const OSAlgebra& os, int k, const std::vector<const int*>& perms,
                                 const std::vector<char>* flat_mask) {
  if (g_threads == 1) return traces_serial(os, k, perms, flat_mask);
  return traces_parallel(os, k, perms, flat_mask);
}

void set_num_threads(int n) {
  g_threads = n;
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace reflact

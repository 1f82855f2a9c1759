#pragma once

#include "reflact/osalg.hpp"

#include <cstdint>
#include <vector>

namespace reflact {

/// tr(g | H^k) for each permutation in `perms`, each a hyperplane
/// permutation of the algebra's arrangement. With `flat_mask`, only NBC
/// monomials whose flat f has flat_mask[f] set contribute, which gives the
/// trace on the corresponding sum of Brieskorn components.
std::vector<std::int64_t> traces_serial(const OSAlgebra& os, int k, const std::vector<const int*>& perms,
                                        const std::vector<char>* flat_mask = nullptr);

/// OpenMP version of traces_serial; identical results.
std::vector<std::int64_t> traces_parallel(const OSAlgebra& os, int k, const std::vector<const int*>& perms,
                                          const std::vector<char>* flat_mask = nullptr);

/// Selects the parallel kernel unless the thread count is 1.
std::vector<std::int64_t> traces(const OSAlgebra& os, int k, const std::vector<const int*>& perms,
                                 const std::vector<char>* flat_mask = nullptr);

void set_num_threads(int n);

}  // namespace reflact

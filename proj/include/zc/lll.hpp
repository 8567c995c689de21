#pragma once

#include <gmpxx.h>

#include <vector>

namespace zc {

/// In-place LLL reduction of the lattice spanned by the rows (which must be
/// linearly independent). All-integer variant: Gram-Schmidt data is carried
/// as the integers d_i (Gram determinants) and lambda_{i,j} = d_j mu_{i,j},
/// so the computation is exact and deterministic. Lovasz parameter
/// delta = delta_num / delta_den (default 3/4).
void lll_reduce(std::vector<std::vector<mpz_class>>& rows, unsigned long delta_num = 3,
                unsigned long delta_den = 4);

}  // namespace zc

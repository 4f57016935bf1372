/// \file sparse.hpp
/// \brief Thin helpers around compressed sparse storage: matrix-vector
///        products with dimension checks and deterministic triplet assembly.
#pragma once

#include <functional>
#include <vector>

#include "surfnse/types.hpp"

namespace surfnse {

/// y = A x. Throws on dimension mismatch.
Vector spmv(const SparseMatrix& a, const Vector& x);

SparseMatrix from_triplets(int rows, int cols,
                           const std::vector<Triplet>& triplets);

/// Number of assembly worker threads: SURFNSE_THREADS if set, else 1.
int assembly_threads();

/// Runs `work(item, buffer)` for every item in [0, n), accumulating triplets
/// into per-chunk buffers that are concatenated in chunk order, so the
/// resulting triplet sequence (and thus the assembled matrix, bit for bit)
/// does not depend on the number of threads.
std::vector<Triplet> assemble_triplets(
    int n_items, const std::function<void(int, std::vector<Triplet>&)>& work);

}  // namespace surfnse

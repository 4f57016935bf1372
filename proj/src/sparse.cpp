#include "surfnse/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace surfnse {

Vector spmv(const SparseMatrix& a, const Vector& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("spmv: dimension mismatch (" +
                                std::to_string(a.cols()) + " cols vs vector " +
                                std::to_string(x.size()) + ")");
  return a * x;
}

SparseMatrix from_triplets(int rows, int cols,
                           const std::vector<Triplet>& triplets) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

int assembly_threads() {
  if (const char* env = std::getenv("SURFNSE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

std::vector<Triplet> assemble_triplets(
    int n_items, const std::function<void(int, std::vector<Triplet>&)>& work) {
  constexpr int kChunk = 256;  // fixed so the merge order is thread-independent
  const int n_chunks = (n_items + kChunk - 1) / kChunk;
  std::vector<std::vector<Triplet>> buffers(std::max(n_chunks, 0));

  auto run_chunk = [&](int chunk) {
    const int begin = chunk * kChunk;
    const int end = std::min(begin + kChunk, n_items);
    for (int i = begin; i < end; ++i) work(i, buffers[chunk]);
  };

  const int n_threads = std::min(assembly_threads(), std::max(n_chunks, 1));
  if (n_threads <= 1) {
    for (int c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < n_threads; ++t)
      pool.emplace_back([&] {
        for (int c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
          run_chunk(c);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<Triplet> merged;
  std::size_t total = 0;
  for (const auto& b : buffers) total += b.size();
  merged.reserve(total);
  for (const auto& b : buffers) merged.insert(merged.end(), b.begin(), b.end());
  return merged;
}

}  // namespace surfnse

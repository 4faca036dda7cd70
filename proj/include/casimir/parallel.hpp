#pragma once

#include <cstddef>
#include <functional>

namespace casimir {

// Worker-thread budget. Defaults to 1; the CASIMIR_THREADS environment
// variable or set_max_threads() raises it.
void set_max_threads(int n);
int max_threads();

// Sum of term(i) for i in [0, count). Terms are accumulated in fixed-size
// blocks with compensated summation and the block partials are reduced in
// index order, so the result is bit-identical for every thread count.
double parallel_block_sum(std::size_t count,
                          const std::function<double(std::size_t)>& term);

}  // namespace casimir

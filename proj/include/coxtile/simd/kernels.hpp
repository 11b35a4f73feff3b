#pragma once

// Batch kernels on structure-of-arrays data. Each has a scalar reference and
// an AVX2 variant; both evaluate every sum in the same order without fused
// multiply-add, so their outputs agree bit for bit.
//
// Layouts: a batch of N points of dimension D is stored dimension-major,
// x[d * stride + i]. Small coefficient tables are row-major.

#include <cstddef>

namespace coxtile::simd {

// out[d * stride + i] = sum_j coords[j * stride + i] * table[j * dims + d].
using ProjectFn = void (*)(const double* coords, std::size_t n, std::size_t stride, const double* table, int h,
                           int dims, double* out);

// out[i] = min_f (offset[f] - |<normal[f], x_i>|).
using SlackFn = void (*)(const double* x, std::size_t n, std::size_t stride, int dims, const double* normals,
                         const double* offsets, int facets, double* out);

// w = A x_i + o (A is rows x dims); out[i] = min_r min(w_r - lo, hi - w_r).
using BoxMarginFn = void (*)(const double* x, std::size_t n, std::size_t stride, int dims, const double* a,
                             const double* o, int rows, double lo, double hi, double* out);

struct KernelTable {
    const char* name;
    ProjectFn project;
    SlackFn slack;
    BoxMarginFn box_margin;
};

enum class Level { scalar, avx2 };

const KernelTable& scalar_kernels();
// Falls back to the scalar table when the binary was built without AVX2.
const KernelTable& avx2_kernels();
bool avx2_compiled();
bool avx2_supported();

// Picks AVX2 when the CPU supports it, unless COXTILE_SIMD=scalar.
Level active_level();
const KernelTable& kernels(Level level);
const KernelTable& active_kernels();

}  // namespace coxtile::simd

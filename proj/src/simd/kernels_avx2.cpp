#include "coxtile/simd/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace coxtile::simd {

namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

void project_avx2(const double* coords, std::size_t n, std::size_t stride, const double* table, int h, int dims,
                  double* out) {
    for (int d = 0; d < dims; ++d) {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256d s = _mm256_setzero_pd();
            for (int j = 0; j < h; ++j) {
                const __m256d c = _mm256_loadu_pd(coords + j * stride + i);
                s = _mm256_add_pd(s, _mm256_mul_pd(c, _mm256_set1_pd(table[j * dims + d])));
            }
            _mm256_storeu_pd(out + d * stride + i, s);
        }
        for (; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < h; ++j) s += coords[j * stride + i] * table[j * dims + d];
            out[d * stride + i] = s;
        }
    }
}

void slack_avx2(const double* x, std::size_t n, std::size_t stride, int dims, const double* normals,
                const double* offsets, int facets, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
        for (int f = 0; f < facets; ++f) {
            __m256d s = _mm256_setzero_pd();
            for (int d = 0; d < dims; ++d)
                s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_set1_pd(normals[f * dims + d]),
                                                   _mm256_loadu_pd(x + d * stride + i)));
            best = _mm256_min_pd(best, _mm256_sub_pd(_mm256_set1_pd(offsets[f]), abs_pd(s)));
        }
        _mm256_storeu_pd(out + i, best);
    }
    for (; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int f = 0; f < facets; ++f) {
            double s = 0.0;
            for (int d = 0; d < dims; ++d) s += normals[f * dims + d] * x[d * stride + i];
            best = std::min(best, offsets[f] - std::abs(s));
        }
        out[i] = best;
    }
}

void box_margin_avx2(const double* x, std::size_t n, std::size_t stride, int dims, const double* a, const double* o,
                     int rows, double lo, double hi, double* out) {
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d vhi = _mm256_set1_pd(hi);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
        for (int r = 0; r < rows; ++r) {
            __m256d w = _mm256_set1_pd(o[r]);
            for (int d = 0; d < dims; ++d)
                w = _mm256_add_pd(w, _mm256_mul_pd(_mm256_set1_pd(a[r * dims + d]), _mm256_loadu_pd(x + d * stride + i)));
            best = _mm256_min_pd(best, _mm256_min_pd(_mm256_sub_pd(w, vlo), _mm256_sub_pd(vhi, w)));
        }
        _mm256_storeu_pd(out + i, best);
    }
    for (; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < rows; ++r) {
            double w = o[r];
            for (int d = 0; d < dims; ++d) w += a[r * dims + d] * x[d * stride + i];
            best = std::min(best, std::min(w - lo, hi - w));
        }
        out[i] = best;
    }
}

}  // namespace

bool avx2_compiled() { return true; }

const KernelTable& avx2_kernels() {
    static const KernelTable table{"avx2", project_avx2, slack_avx2, box_margin_avx2};
    return table;
}

}  // namespace coxtile::simd

#else

namespace coxtile::simd {
bool avx2_compiled() { return false; }
const KernelTable& avx2_kernels() { return scalar_kernels(); }
}  // namespace coxtile::simd

#endif

#include "coxtile/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coxtile::simd {

namespace {

void project_scalar(const double* coords, std::size_t n, std::size_t stride, const double* table, int h, int dims,
                    double* out) {
    for (int d = 0; d < dims; ++d)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < h; ++j) s += coords[j * stride + i] * table[j * dims + d];
            out[d * stride + i] = s;
        }
}

void slack_scalar(const double* x, std::size_t n, std::size_t stride, int dims, const double* normals,
                  const double* offsets, int facets, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int f = 0; f < facets; ++f) {
            double s = 0.0;
            for (int d = 0; d < dims; ++d) s += normals[f * dims + d] * x[d * stride + i];
            best = std::min(best, offsets[f] - std::abs(s));
        }
        out[i] = best;
    }
}

void box_margin_scalar(const double* x, std::size_t n, std::size_t stride, int dims, const double* a,
                       const double* o, int rows, double lo, double hi, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
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

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", project_scalar, slack_scalar, box_margin_scalar};
    return table;
}

}  // namespace coxtile::simd

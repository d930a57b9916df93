#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcat/errors.hpp"
#include "qcat/hecke.hpp"
#include "qcat/tensor_ops.hpp"

using namespace qcat;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled in this build\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "workload", "serial", "parallel", "speedup");

    {
        // Hecke product: a symmetrizer against an X-shifted copy keeps every
        // strand busy rewriting.
        HeckeContext ctx(5, Scalar::generator(ScalarMode::generic()));
        HeckeElement c = symmetrizer(ctx, SymmetrizerKind::Trivial);
        HeckeElement shift = mul_serial(ctx, c, HeckeElement::x_power(ctx, 1, 2));
        auto t0 = std::chrono::steady_clock::now();
        HeckeElement s = mul_serial(ctx, c, shift);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        HeckeElement p = mul(ctx, c, shift);
        double tp = seconds(t0);
        row("hecke S5 symmetrizer mul", ts, tp, s == p);
    }

    {
        DenseOperator y = y_op(3, 4, 4); // 81 x 81 over Q(q)
        auto t0 = std::chrono::steady_clock::now();
        DenseOperator s = y.mul_serial(y);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        DenseOperator p = y.mul(y);
        double tp = seconds(t0);
        row("dense 81x81 y_op square", ts, tp, s == p);
    }

    {
        DenseOperator b = adjacent_braiding(2, 10, 5); // 1024 x 1024, sparse rows
        auto t0 = std::chrono::steady_clock::now();
        DenseOperator s = b.mul_serial(b);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        DenseOperator p = b.mul(b);
        double tp = seconds(t0);
        row("dense 1024x1024 braiding^2", ts, tp, s == p);
    }

    return 0;
}

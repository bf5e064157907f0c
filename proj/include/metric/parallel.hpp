#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace metric::parallel {

// Global cap for the OpenMP kernels. 1 forces the serial paths; 0 restores
// the hardware default. The serial and parallel paths produce identical
// output (each loop iteration is independent and deterministic).
void set_max_threads(int n);
int max_threads();

}  // namespace metric::parallel

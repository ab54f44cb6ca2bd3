/*
   Copyright 2026 the drinmod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRINMOD_PARALLEL_HPP
#define DRINMOD_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drinmod {

// Worker count used by the parallel kernels; 0 means the OpenMP default.
// Every parallel kernel has a serial twin and produces results independent
// of the thread count.
inline int& worker_count() {
    static int n = 0;
    return n;
}

inline void set_workers(int n) { worker_count() = n; }

inline int effective_workers() {
#ifdef _OPENMP
    int n = worker_count();
    return n > 0 ? n : omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace drinmod

#endif

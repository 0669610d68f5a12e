// SPDX-License-Identifier: Apache-2.0
// The distro benchmark_main archive carries LTO bytecode from another gcc.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

// The packaged benchmark_main archive is LTO bytecode from another compiler
// release, so each suite links this main instead.
BENCHMARK_MAIN();

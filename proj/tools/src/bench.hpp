#pragma once

#include <string>

// Runs the benchmark harness: reads a JSON config describing generated
// instance families, solves each, and writes one CSV row per (seed, rep).
// Returns a process exit code.
int run_bench(const std::string& config_path, const std::string& out_path);

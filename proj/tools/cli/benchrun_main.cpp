// SPDX-License-Identifier: Apache-2.0
// benchrun CONFIG: runs the corruption benchmark described by a key = value
// file, writes the per-instance CSV and prints a summary.
#include <iostream>

#include "boolrev/bench.hpp"
#include "boolrev/error.hpp"
#include "boolrev/text_util.hpp"

int main(int argc, char** argv) {
  if (argc != 2 || std::string(argv[1]) == "-h" || std::string(argv[1]) == "--help") {
    std::cerr << "usage: benchrun CONFIG\n";
    return argc == 2 ? 0 : 2;
  }
  try {
    const auto config = boolrev::parseBenchConfig(boolrev::readFile(argv[1]));
    const auto results = boolrev::runBenchmark(config);
    const auto csv = boolrev::benchResultsCsv(results);
    if (config.output_csv.empty()) {
      std::cout << csv;
    } else {
      boolrev::writeFile(config.output_csv, csv);
    }
    std::cout << boolrev::benchSummary(results);
  } catch (const boolrev::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == boolrev::ErrorCode::kIo ? 5 : 3;
  }
  return 0;
}

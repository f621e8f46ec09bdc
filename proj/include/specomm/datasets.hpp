#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "specomm/metrics.hpp"

namespace specomm {

/// How a benchmark row is judged.
enum class BenchCheck {
  kMatch,             ///< each metric must match the reference within tolerance
  kNmiBelowComplete,  ///< only required to score a lower NMI than complete mode
  kAdvisory,          ///< reported, never fails the run
};

struct BenchTolerance {
  double q = 0.001;
  double accuracy = 0.001;
  double nmi = 0.005;
};

struct DatasetEntry {
  std::string name;
  std::string edge_file;   ///< relative to the data directory
  std::string truth_file;  ///< relative to the data directory
  std::size_t k = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  MetricTriple expected_lite;
  MetricTriple expected_complete;
  BenchCheck lite_check = BenchCheck::kMatch;
  BenchCheck complete_check = BenchCheck::kMatch;
  BenchTolerance tolerance;
  std::string notes;  ///< where to get the files when they are not bundled
};

/// Benchmark networks in report order.
const std::vector<DatasetEntry>& dataset_registry();

/// $SPECOMM_DATA_DIR if set, otherwise the bundled data directory.
std::filesystem::path data_directory();

}  // namespace specomm

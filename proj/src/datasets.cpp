#include "specomm/datasets.hpp"

#include <cstdlib>

#ifndef SPECOMM_DEFAULT_DATA_DIR
#define SPECOMM_DEFAULT_DATA_DIR "data"
#endif

namespace specomm {

const std::vector<DatasetEntry>& dataset_registry() {
  static const std::vector<DatasetEntry> registry = [] {
    std::vector<DatasetEntry> r;

    DatasetEntry karate;
    karate.name = "karate";
    karate.edge_file = "karate.edges";
    karate.truth_file = "karate.truth";
    karate.k = 2;
    karate.vertices = 34;
    karate.edges = 78;
    karate.expected_lite = {0.360, 0.971, 0.836};
    karate.expected_complete = {0.371, 1.000, 1.000};
    r.push_back(karate);

    DatasetEntry dolphins;
    dolphins.name = "dolphins";
    dolphins.edge_file = "dolphins.edges";
    dolphins.truth_file = "dolphins.truth";
    dolphins.k = 2;
    dolphins.vertices = 62;
    dolphins.edges = 159;
    dolphins.expected_lite = {0.385, 0.968, 0.814};
    dolphins.expected_complete = {0.385, 0.968, 0.814};
    dolphins.notes =
        "Lusseau bottlenose dolphin network (dolphins.gml from Newman's network data page); "
        "ground truth is the two-way split after the departure of SN100";
    r.push_back(dolphins);

    DatasetEntry risk;
    risk.name = "riskmap";
    risk.edge_file = "riskmap.edges";
    risk.truth_file = "riskmap.truth";
    risk.k = 6;
    risk.vertices = 42;
    risk.edges = 83;
    risk.expected_lite = {0.554, 0.643, 0.705};
    risk.expected_complete = {0.631, 0.976, 0.956};
    risk.lite_check = BenchCheck::kAdvisory;
    risk.complete_check = BenchCheck::kAdvisory;
    risk.tolerance = {0.005, 0.005, 0.01};
    risk.notes =
        "Risk board-game territory adjacency (42 territories, 6 continents); convert to "
        "'territory territory' edge lines and 'territory continent' truth lines";
    r.push_back(risk);

    DatasetEntry collab;
    collab.name = "collaboration";
    collab.edge_file = "collaboration.edges";
    collab.truth_file = "collaboration.truth";
    collab.k = 6;
    collab.vertices = 118;
    collab.edges = 197;
    collab.expected_lite = {0.734, 0.924, 0.895};
    collab.expected_complete = {0.740, 0.949, 0.936};
    collab.lite_check = BenchCheck::kAdvisory;
    collab.complete_check = BenchCheck::kAdvisory;
    collab.tolerance = {0.005, 0.005, 0.01};
    collab.notes =
        "Santa Fe Institute coauthorship network (largest component, 118 scientists) with the "
        "six research-area labels; convert to edge and truth files";
    r.push_back(collab);

    DatasetEntry football;
    football.name = "football";
    football.edge_file = "football.edges";
    football.truth_file = "football.truth";
    football.k = 12;
    football.vertices = 115;
    football.edges = 613;
    football.expected_lite = {0.503, 0.809, 0.811};
    football.expected_complete = {0.601, 1.000, 1.000};
    football.lite_check = BenchCheck::kNmiBelowComplete;
    football.notes =
        "2000 NCAA Division I-A schedule (football.gml from Newman's network data page); "
        "truth is the 'value' (conference) attribute";
    r.push_back(football);

    return r;
  }();
  return registry;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("SPECOMM_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return SPECOMM_DEFAULT_DATA_DIR;
}

}  // namespace specomm

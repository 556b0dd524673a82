#pragma once

#include <string>
#include <vector>

#include "pepr/resource.hpp"

namespace pepr {

/// One published benchmark row: top-5 by score plus the best-performance
/// model for each dataset block.
struct BenchRow {
  std::string model;
  bool efficient;
  double params_millions;
  double memory_gb;
  double energy_wh;
  double time_s;
  double test_p;
  double pepr_e;  // as published, normalized within the full experiment
};

struct ModelInfo {
  std::string name;
  double params_millions;
  ArchClass arch_class;
  bool efficient;
};

// Bundled dataset names: table2_derma_npt, table2_derma, table2_lidc,
// table2_pneumonia, table3_models.
const std::vector<std::string>& bundled_names();
bool is_bundled(const std::string& name);

const std::vector<BenchRow>& bundled_block(const std::string& name);
const std::vector<ModelInfo>& bundled_models();  // table3_models, 131 rows

/// Bundled block as run records (dataset_id = block name).
std::vector<RunRecord> bundled_records(const std::string& name);

}  // namespace pepr

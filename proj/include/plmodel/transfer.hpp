#pragma once

#include "plmodel/metrics.hpp"
#include "plmodel/regression.hpp"
#include "plmodel/types.hpp"

namespace plmodel {

// Cross-environment experiment: fit once on the source training split, then
// evaluate the frozen fit in-domain (source test split) and cross-domain
// (full target set). The fit is never refit on target data.
struct TransferReport {
    std::string source_env;
    std::string target_env;
    RegressionFit fit;
    EvalReport in_domain;
    EvalReport cross_domain;
    SplitSpec split;
};

TransferReport run_transfer(const Dataset& source, const Dataset& target,
                            const FeatureSelection& features, const SplitSpec& split);

struct AblationRung {
    FeatureSelection features;  // as requested, before degenerate-column drops
    RegressionFit fit;
    EvalReport train_eval;
    EvalReport test_eval;
};

struct AblationReport {
    std::vector<AblationRung> rungs;
    SplitSpec split;
};

// LR -> MLR(3) -> MLR(8)
std::vector<FeatureSelection> default_feature_ladder();

// Feature-ablation comparison over a nested ladder; every rung sees the
// identical train/test partition.
AblationReport run_ablation(const Dataset& dataset, const std::vector<FeatureSelection>& ladder,
                            const SplitSpec& split);

}  // namespace plmodel

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rssl/rng.hpp"
#include "rssl/weighting.hpp"

namespace rssl {

/// Row indices of one bootstrap replicate; length n, repetition allowed.
struct SampleDraw {
    std::vector<Eigen::Index> indices;
};

/// Distinct feature indices, ascending.
struct SubsetDraw {
    std::vector<Eigen::Index> indices;
};

/// n iid uniform draws from {0..n-1}.
SampleDraw bootstrap(Eigen::Index n, RngStream& rng);

/// Weighted sampling without replacement: d sequential draws, each with
/// probability proportional to the remaining weights, the chosen index removed
/// and the rest renormalized. When fewer than d indices carry positive weight
/// the positive ones are all taken and the remainder is filled uniformly from
/// the zero-weight indices. Output sorted ascending.
SubsetDraw draw_subset(const FeatureWeights& weights, Eigen::Index d, RngStream& rng);

}  // namespace rssl

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcsl::fedlearn {

// Row-major feature matrix with integer class labels.
struct DatasetShard {
    size_t feature_dim = 0;
    std::vector<double> features;  // size() == labels.size() * feature_dim
    std::vector<int> labels;
    std::string owner;

    size_t size() const { return labels.size(); }
    const double* row(size_t i) const { return features.data() + i * feature_dim; }
};

struct SyntheticDataset {
    std::vector<DatasetShard> shards;
    DatasetShard test;  // held-out tenth of the samples
    int classes = 0;
    size_t feature_dim = 0;
};

// Gaussian class clusters. Class c's mean sits on axis (c mod features) at
// `separation`; the first `classes` dimensions carry unit noise and the rest
// carry `ambient_noise`-scaled noise, which controls how ill-conditioned (and
// therefore how slow to fit) the task is. skew = 0 deals samples round-robin
// (IID shards); skew = 1 sends every sample to the shard of its label class.
SyntheticDataset make_synthetic_dataset(uint64_t seed, size_t n_samples, int classes,
                                        size_t features, size_t n_shards, double skew,
                                        double separation = 3.0, double ambient_noise = 1.0);

}  // namespace mcsl::fedlearn

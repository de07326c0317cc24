#include "rssl/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace rssl {

SampleDraw bootstrap(Eigen::Index n, RngStream& rng) {
    if (n < 1) {
        throw std::invalid_argument("bootstrap: n must be >= 1");
    }
    SampleDraw draw;
    draw.indices.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        draw.indices[i] = static_cast<Eigen::Index>(rng.next_index(static_cast<std::uint64_t>(n)));
    }
    return draw;
}

SubsetDraw draw_subset(const FeatureWeights& weights, Eigen::Index d, RngStream& rng) {
    const Eigen::Index p = weights.size();
    if (d < 1) {
        throw std::invalid_argument("draw_subset: d must be >= 1");
    }
    if (d > p) {
        throw std::invalid_argument("draw_subset: d exceeds the number of features");
    }

    Eigen::VectorXd remaining = weights.weights;
    std::vector<bool> taken(p, false);
    SubsetDraw out;
    out.indices.reserve(d);

    for (Eigen::Index k = 0; k < d; ++k) {
        const double total = remaining.sum();
        Eigen::Index chosen = -1;
        if (total > 0.0) {
            const double u = rng.next_uniform() * total;
            double acc = 0.0;
            for (Eigen::Index j = 0; j < p; ++j) {
                if (remaining[j] <= 0.0) {
                    continue;
                }
                acc += remaining[j];
                if (u < acc) {
                    chosen = j;
                    break;
                }
            }
            if (chosen < 0) {
                // Rounding pushed u past the last positive entry.
                for (Eigen::Index j = p - 1; j >= 0; --j) {
                    if (remaining[j] > 0.0) {
                        chosen = j;
                        break;
                    }
                }
            }
        } else {
            // Positive support exhausted: fill uniformly from untaken indices.
            std::vector<Eigen::Index> pool;
            for (Eigen::Index j = 0; j < p; ++j) {
                if (!taken[j]) {
                    pool.push_back(j);
                }
            }
            chosen = pool[rng.next_index(pool.size())];
        }
        taken[chosen] = true;
        remaining[chosen] = 0.0;
        out.indices.push_back(chosen);
    }

    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

}  // namespace rssl

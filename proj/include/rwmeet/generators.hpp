#pragma once

#include <cstdint>
#include <stdexcept>

#include "rwmeet/graph.hpp"

namespace rwmeet {

enum class Model { BA, ER };

struct GeneratorParams {
    Model model = Model::BA;
    int n = 0;
    int m = 0;           // BA: links per new node
    double p = 0.0;      // ER: edge probability
    std::uint64_t seed = 0;
    int max_retries = 50;  // ER connectivity retries
};

/// Thrown when no connected ER graph could be generated within max_retries.
class GenerationError : public std::runtime_error {
public:
    GenerationError(int attempts, const std::string& what)
        : std::runtime_error(what), attempts_(attempts) {}
    int attempts() const { return attempts_; }

private:
    int attempts_;
};

/// Preferential attachment starting from a complete graph on m nodes; each of
/// the remaining n - m nodes attaches m links to distinct existing nodes with
/// probability proportional to current degree. Degrees update link by link
/// within one insertion step. Unweighted, simple, connected by construction.
WeightedGraph generate_ba(int n, int m, std::uint64_t seed);

/// G(n, p); regenerates with a derived seed while disconnected, up to
/// max_retries attempts. Throws GenerationError when exhausted.
WeightedGraph generate_er(int n, double p, std::uint64_t seed, int max_retries = 50);

/// Couples both families to one target average degree:
/// BA m = floor(d_avg/2), ER p = d_avg/(n-1).
GeneratorParams params_for_target_degree(Model model, int n, double d_avg_target,
                                         std::uint64_t seed);

WeightedGraph generate(const GeneratorParams& params);

}  // namespace rwmeet

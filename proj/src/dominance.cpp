#include "sway/dominance.hpp"

#include <cmath>

namespace sway {

namespace {

void check_lengths(const std::vector<double>& x, const std::vector<double>& y,
                   const ObjectiveSpec& spec) {
    if (x.size() != spec.size() || y.size() != spec.size())
        throw StructuralError("objective vector length does not match spec");
}

} // namespace

bool binary_dominates(const std::vector<double>& x, const std::vector<double>& y,
                      const ObjectiveSpec& spec) {
    check_lengths(x, y, spec);
    bool strictly_better = false;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const bool minimize = spec.items[j].direction == Direction::Minimize;
        const double a = minimize ? x[j] : -x[j];
        const double b = minimize ? y[j] : -y[j];
        if (a > b) return false;
        if (a < b) strictly_better = true;
    }
    return strictly_better;
}

double cdom_loss(const std::vector<double>& x, const std::vector<double>& y,
                 const ObjectiveSpec& spec) {
    check_lengths(x, y, spec);
    const double n = static_cast<double>(spec.size());
    double loss = 0.0;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const double delta = spec.items[j].weight * (x[j] - y[j]) / n;
        loss += -std::exp(delta) / n;
    }
    return loss;
}

bool cdom_dominates(const std::vector<double>& x, const std::vector<double>& y,
                    const ObjectiveSpec& spec) {
    return cdom_loss(y, x, spec) > cdom_loss(x, y, spec);
}

DominanceVerdict better(const std::vector<Candidate>& west_reps,
                        const std::vector<Candidate>& east_reps,
                        const ObjectiveSpec& spec) {
    if (west_reps.size() != east_reps.size())
        throw StructuralError("representative lists differ in length");
    int west_wins = 0;
    int east_wins = 0;
    for (std::size_t i = 0; i < west_reps.size(); ++i) {
        const auto& w = west_reps[i];
        const auto& e = east_reps[i];
        if (!w.evaluated() || !e.evaluated())
            throw StateError("better() requires evaluated representatives");
        if (binary_dominates(*w.objectives, *e.objectives, spec))
            ++west_wins;
        else if (binary_dominates(*e.objectives, *w.objectives, spec))
            ++east_wins;
    }
    if (west_wins > east_wins) return DominanceVerdict::LeftBetter;
    if (east_wins > west_wins) return DominanceVerdict::RightBetter;
    return DominanceVerdict::Neither;
}

} // namespace sway

#ifndef SWAY_DOMINANCE_HPP
#define SWAY_DOMINANCE_HPP

#include <vector>

#include "sway/core.hpp"

namespace sway {

enum class DominanceVerdict { LeftBetter, RightBetter, Neither };

// Binary domination: x is no worse than y on every objective (per direction)
// and strictly better on at least one.
bool binary_dominates(const std::vector<double>& x, const std::vector<double>& y,
                      const ObjectiveSpec& spec);

// Continuous-domination loss of Zitzler's indicator form:
//   loss(x,y) = sum_j -exp(w_j * (o_jx - o_jy) / n) / n
// x continuous-dominates y iff loss(y,x) > loss(x,y). Expects normalized
// objectives; the exponentials are scale-sensitive.
double cdom_loss(const std::vector<double>& x, const std::vector<double>& y,
                 const ObjectiveSpec& spec);

bool cdom_dominates(const std::vector<double>& x, const std::vector<double>& y,
                    const ObjectiveSpec& spec);

// Compare representative pairs (paired by annulus for the binary split; a
// single pair for the continuous split). Majority of binary dominations
// decides; any tie, including zero dominations, is Neither.
DominanceVerdict better(const std::vector<Candidate>& west_reps,
                        const std::vector<Candidate>& east_reps,
                        const ObjectiveSpec& spec);

} // namespace sway

#endif

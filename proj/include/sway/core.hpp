#ifndef SWAY_CORE_HPP
#define SWAY_CORE_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sway/errors.hpp"
#include "sway/rng.hpp"

namespace sway {

enum class SpaceKind { Continuous, Binary };

struct Dimension {
    std::string name;
    double lo = 0.0; // binary dims keep the implicit {0,1} domain
    double hi = 1.0;
    std::string units;
};

struct DecisionSpace {
    SpaceKind kind = SpaceKind::Continuous;
    std::string name;
    std::vector<Dimension> dims;

    std::size_t size() const { return dims.size(); }
    void validate() const;

    // Sum of range widths; the measure used to compare scenario flexibility.
    double extent() const;
};

struct Candidate {
    std::vector<double> decisions;
    std::optional<std::vector<double>> objectives;

    bool evaluated() const { return objectives.has_value(); }
    // The ledger is charged exactly when objectives appear.
    bool eval_charged() const { return evaluated(); }
};

enum class Direction { Minimize, Maximize };

struct Objective {
    std::string name;
    Direction direction = Direction::Minimize;
    double weight = -1.0; // +1 for Maximize, -1 for Minimize
    double lo = 0.0;      // normalization bounds, set by calibrate()
    double hi = 0.0;
    bool calibrated = false;
};

struct ObjectiveSpec {
    std::vector<Objective> items;

    std::size_t size() const { return items.size(); }

    static ObjectiveSpec make(std::initializer_list<std::pair<const char*, Direction>> defs);
    void add(const std::string& name, Direction d);

    // Fit normalization bounds to the union of observed objective vectors.
    void calibrate(const std::vector<std::vector<double>>& observed);
    bool calibrated() const;
};

// A set of mutually non-dominated evaluated candidates (after filtering).
struct Front {
    std::vector<Candidate> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

struct EvaluationLedger {
    std::atomic<std::int64_t> evaluations{0};
    double wall_seconds = 0.0;

    std::int64_t count() const { return evaluations.load(); }
    void charge() { evaluations.fetch_add(1, std::memory_order_relaxed); }
};

class ProblemModel {
public:
    virtual ~ProblemModel() = default;

    const DecisionSpace& decision_space() const { return space_; }
    const ObjectiveSpec& objective_spec() const { return spec_; }
    std::uint64_t model_seed() const { return seed_; }
    const std::string& name() const { return space_.name; }

    // Deterministic in (decisions, model seed). Throws ValidityError when the
    // decisions fail the validity predicate.
    virtual std::vector<double> evaluate_raw(const std::vector<double>& decisions) const = 0;

    virtual bool valid(const std::vector<double>& decisions) const;

    // Yields candidates satisfying the validity predicate.
    virtual Candidate generate(Rng& rng) const;
    virtual std::vector<Candidate> generate_pool(std::size_t n, std::uint64_t seed) const;

protected:
    ProblemModel(DecisionSpace space, ObjectiveSpec spec, std::uint64_t seed)
        : space_(std::move(space)), spec_(std::move(spec)), seed_(seed) {
        space_.validate();
    }

    DecisionSpace space_;
    ObjectiveSpec spec_;
    std::uint64_t seed_;
};

// Unit-scale continuous decisions; degenerate dims (lo == hi) map to 0.
std::vector<double> normalize_decisions(const Candidate& c, const DecisionSpace& s);
std::vector<double> denormalize_decisions(const std::vector<double>& unit, const DecisionSpace& s);

// Populate objectives, charging the ledger exactly once per candidate.
// Re-evaluating an evaluated candidate returns it unchanged.
Candidate evaluate(const ProblemModel& m, Candidate c, EvaluationLedger& ledger);

// Evaluate all pool members in place. `threads <= 1` runs the serial
// reference path; results are identical either way (slot writes only).
void evaluate_pool(const ProblemModel& m, std::vector<Candidate>& pool,
                   EvaluationLedger& ledger, int threads);
void evaluate_pool_serial(const ProblemModel& m, std::vector<Candidate>& pool,
                          EvaluationLedger& ledger);

// Rescale every objective to [0,1] and flip Maximize objectives so lower is
// always better. Values outside the calibrated bounds clamp to [0,1].
Front normalize_objectives(const Front& front, const ObjectiveSpec& spec);
std::vector<double> normalize_objective_vector(const std::vector<double>& raw,
                                               const ObjectiveSpec& spec);

} // namespace sway

#endif

#include "sway/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "sway/parallel.hpp"

namespace sway {

void DecisionSpace::validate() const {
    if (dims.empty())
        throw StructuralError("decision space '" + name + "' has no dimensions");
    std::set<std::string> seen;
    for (const auto& d : dims) {
        if (!seen.insert(d.name).second)
            throw StructuralError("duplicate dimension name '" + d.name + "'");
        if (kind == SpaceKind::Continuous && d.lo > d.hi)
            throw StructuralError("dimension '" + d.name + "' has lower > upper");
    }
}

double DecisionSpace::extent() const {
    double total = 0.0;
    for (const auto& d : dims) total += d.hi - d.lo;
    return total;
}

void ObjectiveSpec::add(const std::string& name, Direction d) {
    Objective o;
    o.name = name;
    o.direction = d;
    o.weight = (d == Direction::Maximize) ? 1.0 : -1.0;
    items.push_back(std::move(o));
}

ObjectiveSpec ObjectiveSpec::make(std::initializer_list<std::pair<const char*, Direction>> defs) {
    ObjectiveSpec spec;
    for (const auto& [name, dir] : defs) spec.add(name, dir);
    return spec;
}

void ObjectiveSpec::calibrate(const std::vector<std::vector<double>>& observed) {
    if (observed.empty()) throw ConfigError("cannot calibrate objective bounds from no observations");
    for (std::size_t j = 0; j < items.size(); ++j) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& row : observed) {
            if (row.size() != items.size())
                throw StructuralError("objective vector length mismatch during calibration");
            lo = std::min(lo, row[j]);
            hi = std::max(hi, row[j]);
        }
        items[j].lo = lo;
        items[j].hi = hi;
        items[j].calibrated = true;
    }
}

bool ObjectiveSpec::calibrated() const {
    return !items.empty() &&
           std::all_of(items.begin(), items.end(), [](const Objective& o) { return o.calibrated; });
}

bool ProblemModel::valid(const std::vector<double>& decisions) const {
    if (decisions.size() != space_.size()) return false;
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        const auto& d = space_.dims[i];
        if (space_.kind == SpaceKind::Binary) {
            if (decisions[i] != 0.0 && decisions[i] != 1.0) return false;
        } else if (decisions[i] < d.lo || decisions[i] > d.hi) {
            return false;
        }
    }
    return true;
}

Candidate ProblemModel::generate(Rng& rng) const {
    Candidate c;
    c.decisions.reserve(space_.size());
    for (const auto& d : space_.dims) {
        if (space_.kind == SpaceKind::Binary)
            c.decisions.push_back(rng.coin() ? 1.0 : 0.0);
        else
            c.decisions.push_back(rng.uniform(d.lo, d.hi));
    }
    return c;
}

std::vector<Candidate> ProblemModel::generate_pool(std::size_t n, std::uint64_t seed) const {
    std::vector<Candidate> pool;
    pool.reserve(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) pool.push_back(generate(rng));
    return pool;
}

std::vector<double> normalize_decisions(const Candidate& c, const DecisionSpace& s) {
    if (s.kind != SpaceKind::Continuous)
        throw StructuralError("normalize_decisions requires a continuous space");
    if (c.decisions.size() != s.size())
        throw StructuralError("candidate has " + std::to_string(c.decisions.size()) +
                              " decisions, space has " + std::to_string(s.size()));
    std::vector<double> unit(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& d = s.dims[i];
        unit[i] = (d.hi > d.lo) ? (c.decisions[i] - d.lo) / (d.hi - d.lo) : 0.0;
    }
    return unit;
}

std::vector<double> denormalize_decisions(const std::vector<double>& unit, const DecisionSpace& s) {
    if (unit.size() != s.size()) throw StructuralError("unit vector length mismatch");
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& d = s.dims[i];
        out[i] = d.lo + unit[i] * (d.hi - d.lo);
    }
    return out;
}

Candidate evaluate(const ProblemModel& m, Candidate c, EvaluationLedger& ledger) {
    if (c.evaluated()) return c;
    if (!m.valid(c.decisions))
        throw ValidityError("candidate violates validity predicate of model '" + m.name() + "'");
    c.objectives = m.evaluate_raw(c.decisions);
    if (c.objectives->size() != m.objective_spec().size())
        throw StructuralError("model returned wrong objective count");
    ledger.charge();
    return c;
}

void evaluate_pool_serial(const ProblemModel& m, std::vector<Candidate>& pool,
                          EvaluationLedger& ledger) {
    for (auto& c : pool) c = evaluate(m, std::move(c), ledger);
}

void evaluate_pool(const ProblemModel& m, std::vector<Candidate>& pool,
                   EvaluationLedger& ledger, int threads) {
    if (threads <= 1) {
        evaluate_pool_serial(m, pool, ledger);
        return;
    }
    par_for(pool.size(), threads, [&](std::size_t i) {
        pool[i] = evaluate(m, std::move(pool[i]), ledger);
    });
}

std::vector<double> normalize_objective_vector(const std::vector<double>& raw,
                                               const ObjectiveSpec& spec) {
    if (raw.size() != spec.size()) throw StructuralError("objective vector length mismatch");
    if (!spec.calibrated()) throw ConfigError("objective normalization bounds not calibrated");
    std::vector<double> out(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) {
        const auto& o = spec.items[j];
        // Bounds can degenerate when every observation coincides; those
        // objectives carry no information and map to the best value.
        double v = (o.hi > o.lo) ? (raw[j] - o.lo) / (o.hi - o.lo) : 0.0;
        if (o.direction == Direction::Maximize) v = 1.0 - v;
        out[j] = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

Front normalize_objectives(const Front& front, const ObjectiveSpec& spec) {
    Front out;
    out.members.reserve(front.size());
    for (const auto& c : front.members) {
        if (!c.evaluated()) throw StateError("cannot normalize an unevaluated candidate");
        Candidate n = c;
        n.objectives = normalize_objective_vector(*c.objectives, spec);
        out.members.push_back(std::move(n));
    }
    return out;
}

} // namespace sway

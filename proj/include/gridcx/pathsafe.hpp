#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gridcx/links.hpp"

namespace gridcx {

/** A walk through the state graph: keys.size() == generators.size() + 1. */
struct Path {
  std::vector<std::string> keys;
  std::vector<Generator> generators;

  std::size_t length() const { return generators.size(); }
};

/**
 * Breadth-first shortest path between two explored states.  Ties are broken
 * toward the lexicographically smallest next key, so the result is unique.
 * Throws std::invalid_argument for unknown keys, PlanError when no path
 * exists.
 */
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Path shortest_path(const StateGraph& sg, const std::string& from,
                   const std::string& to);

/** Batches execute left to right; items within a batch run concurrently. */
struct ParallelPlan {
  std::vector<std::vector<PlanItem>> batches;
};

/**
 * Greedily packs the requested items into batches.  Every batch is pairwise
 * support-disjoint and admissible at its execution state, and no batch of
 * two or more generators lies inside an empty simplex of that state's link
 * (single items always execute safely on their own).  Items conflicting
 * with a batch are deferred.  Throws NotAdmissible when a requested item is
 * inadmissible at the start state, PlanError when a deferred item never
 * becomes executable.
 */
ParallelPlan plan_parallel(const StateComplex& cx, const std::string& key,
                           const std::vector<PlanItem>& requested);

/** Applies one pairwise-disjoint batch; order inside the batch is immaterial. */
State execute_batch(const Gridworld& g, const State& s,
                    const std::vector<PlanItem>& batch);

State execute_plan(const Gridworld& g, const State& s, const ParallelPlan& plan);

}  // namespace gridcx

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace netop {

// An indivisible activity: demands so many agents of each kind for a
// fixed integral duration, possibly after prerequisite tasks.
struct PrimitiveTask {
  std::string name;
  std::map<std::string, std::size_t> demands;  // kind -> count >= 1
  std::int64_t duration = 1;
  std::vector<std::string> prereqs;  // unique, resolved against task names

  friend bool operator==(const PrimitiveTask&, const PrimitiveTask&) = default;
};

struct PlanVariable {
  enum class Role { Start, Assignment };

  Role role = Role::Start;
  std::size_t task = 0;  // index into ConstraintProgram::tasks
  std::string kind;      // demanded kind (Assignment only)
  std::vector<std::int64_t> domain;  // ascending; start times or agent indices

  friend bool operator==(const PlanVariable&, const PlanVariable&) = default;
};

// Direct translation of a task set over a concrete fleet: one start
// variable per task with domain [0, horizon], one assignment variable
// per demanded agent with the eligible agent indices as domain.
// Constraints (precedence, all-different within a task, no agent on two
// overlapping tasks) are implied by the task data and `precedences`.
struct ConstraintProgram {
  std::vector<PrimitiveTask> tasks;  // topological order of prereqs, ties by name
  std::vector<std::string> agent_kinds;
  std::int64_t horizon = 0;
  std::vector<PlanVariable> variables;
  std::vector<std::pair<std::size_t, std::size_t>> precedences;  // (pred, succ) task indices
  std::vector<std::size_t> start_vars;                // per task
  std::vector<std::vector<std::size_t>> assign_vars;  // per task, demand order

  friend bool operator==(const ConstraintProgram&, const ConstraintProgram&) = default;
};

// Total on acyclic, well-named input: a demand no fleet agent can serve
// yields an empty-domain variable (infeasible program), not an error.
ConstraintProgram translate_tasks(std::vector<PrimitiveTask> tasks,
                                  std::vector<std::string> agent_kinds,
                                  std::int64_t horizon);

struct ScheduledTask {
  std::string name;
  std::int64_t start = 0;
  std::vector<std::size_t> agents;  // aligned with the task's assign_vars

  friend bool operator==(const ScheduledTask&, const ScheduledTask&) = default;
};

struct Schedule {
  std::vector<ScheduledTask> tasks;
  std::int64_t makespan = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class SolveStatus { Optimal, Infeasible, NodeBudgetExhausted };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  // Optimal: the proven-optimal schedule.  NodeBudgetExhausted: best
  // schedule found before the budget ran out, if any; no optimality
  // claim.
  std::optional<Schedule> schedule;
  std::size_t nodes = 0;  // value-assignment attempts
};

// Depth-first backtracking with forward checking: smallest current
// domain first (ties by variable index), values in ascending order,
// iteratively tightening a makespan upper bound until the optimum is
// proven.  Fully deterministic.
SolveResult solve(const ConstraintProgram& cp, std::size_t node_budget = 1'000'000);

enum class ViolationKind {
  UnknownTask,
  MissingTask,
  DuplicateTask,
  OutOfHorizon,
  Precedence,
  WrongAgentCount,
  WrongKind,
  UnknownAgent,
  AgentReuseWithinTask,
  DoubleBooking,
  BadMakespan,
};

const char* to_string(ViolationKind kind);

struct ScheduleViolation {
  ViolationKind kind = ViolationKind::UnknownTask;
  std::string detail;

  friend bool operator==(const ScheduleViolation&, const ScheduleViolation&) = default;
};

// Independent checker: lists every violated constraint; empty report iff
// the schedule satisfies the program.
std::vector<ScheduleViolation> validate_schedule(const Schedule& schedule,
                                                 const ConstraintProgram& cp);

}  // namespace netop

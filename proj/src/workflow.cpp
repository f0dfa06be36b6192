#include "costless/workflow.hpp"

#include <algorithm>

#include "costless/errors.hpp"

namespace costless {

std::size_t FnSeq::index_of(const FunctionId& fn) const {
  auto it = std::find(order.begin(), order.end(), fn);
  if (it == order.end()) {
    throw InvalidInputError("unknown function '" + fn + "'");
  }
  return static_cast<std::size_t>(it - order.begin());
}

std::optional<std::size_t> FnSeq::group_equal(std::size_t first,
                                              std::size_t last) const {
  for (std::size_t g = 0; g < parallel_groups.size(); ++g) {
    if (parallel_groups[g].first == first && parallel_groups[g].second == last) {
      return g;
    }
  }
  return std::nullopt;
}

bool FnSeq::range_ok(std::size_t first, std::size_t last) const {
  for (std::size_t b : barriers) {
    if (first < b && b <= last) {
      return false;
    }
  }
  for (const auto& [g1, g2] : parallel_groups) {
    const bool overlaps = first <= g2 && g1 <= last;
    const bool contains = first <= g1 && g2 <= last;
    if (overlaps && !contains) {
      return false;
    }
  }
  return true;
}

namespace {

const State& state_at(const WorkflowSpec& wf, const std::string& name) {
  auto it = wf.states.find(name);
  if (it == wf.states.end()) {
    throw InvalidWorkflowError("state '" + name + "' is not defined");
  }
  return it->second;
}

// DFS over every successor edge: cycle check plus reachability marking.
void dfs(const WorkflowSpec& wf, const std::string& name,
         std::set<std::string>& on_path, std::set<std::string>& visited) {
  if (on_path.count(name)) {
    throw CyclicWorkflowError("cycle through state '" + name + "'");
  }
  if (visited.count(name)) {
    return;
  }
  visited.insert(name);
  on_path.insert(name);
  const State& st = state_at(wf, name);
  std::vector<std::string> succ;
  if (const auto* task = std::get_if<TaskState>(&st)) {
    if (task->next) {
      succ.push_back(*task->next);
    }
  } else if (const auto* par = std::get_if<ParallelState>(&st)) {
    if (par->next) {
      succ.push_back(*par->next);
    }
  } else if (const auto* choice = std::get_if<ChoiceState>(&st)) {
    succ.push_back(choice->main_next);
    succ.insert(succ.end(), choice->other_next.begin(), choice->other_next.end());
  }
  for (const auto& s : succ) {
    dfs(wf, s, on_path, visited);
  }
  on_path.erase(name);
}

}  // namespace

FnSeq to_fnseq(const WorkflowSpec& workflow) {
  if (workflow.start.empty()) {
    throw InvalidWorkflowError("workflow has no start state");
  }

  std::set<std::string> on_path;
  std::set<std::string> visited;
  dfs(workflow, workflow.start, on_path, visited);
  for (const auto& [name, st] : workflow.states) {
    if (!visited.count(name)) {
      throw UnreachableStateError("state '" + name + "' is unreachable");
    }
  }

  FnSeq seq;
  std::set<std::size_t> raw_barriers;
  std::set<FunctionId> seen_fns;
  std::vector<FunctionId> prev_fns;  // functions feeding the next state
  bool prev_was_single_task = false;
  bool terminated = false;

  auto emit = [&](const FunctionId& fn) {
    if (!seen_fns.insert(fn).second) {
      throw InvalidWorkflowError("function '" + fn +
                                 "' appears more than once on the main path");
    }
    for (const auto& p : prev_fns) {
      seq.adjacency.emplace_back(p, fn);
    }
    seq.order.push_back(fn);
  };

  std::string cur = workflow.start;
  while (!terminated) {
    const State& st = state_at(workflow, cur);
    if (const auto* task = std::get_if<TaskState>(&st)) {
      if (task->end == task->next.has_value()) {
        throw InvalidWorkflowError("task '" + cur +
                                   "' must have exactly one of Next/End");
      }
      emit(cur);
      prev_fns = {cur};
      prev_was_single_task = true;
      if (task->end) {
        terminated = true;
      } else {
        cur = *task->next;
      }
    } else if (const auto* par = std::get_if<ParallelState>(&st)) {
      if (par->branches.empty()) {
        throw InvalidWorkflowError("parallel '" + cur + "' has no branches");
      }
      const std::size_t group_first = seq.order.size();
      std::vector<FunctionId> members;
      for (const auto& branch : par->branches) {
        if (branch.size() != 1) {
          throw UnsupportedStateError(
              "parallel '" + cur + "': branches must be single-function chains");
        }
        const std::string& fn = branch.front();
        auto it = workflow.states.find(fn);
        if (it != workflow.states.end() && !std::holds_alternative<TaskState>(it->second)) {
          throw UnsupportedStateError("parallel '" + cur + "': branch '" + fn +
                                      "' is not a task");
        }
        members.push_back(fn);
      }
      for (const auto& fn : members) {
        emit(fn);
      }
      seq.parallel_groups.emplace_back(group_first, seq.order.size() - 1);
      prev_fns = members;
      prev_was_single_task = false;
      if (par->end == par->next.has_value()) {
        throw InvalidWorkflowError("parallel '" + cur +
                                   "' must have exactly one of Next/End");
      }
      if (par->end) {
        terminated = true;
      } else {
        cur = *par->next;
      }
    } else {
      const auto& choice = std::get<ChoiceState>(st);
      // Only the main branch is represented; the deciding task (when it is
      // the immediately preceding state) may not be fused across.
      if (prev_was_single_task && !seq.order.empty()) {
        const std::size_t k = seq.order.size() - 1;
        raw_barriers.insert(k);
        raw_barriers.insert(k + 1);
      }
      prev_was_single_task = false;
      cur = choice.main_next;
    }
  }

  for (std::size_t b : raw_barriers) {
    if (b >= 1 && b + 1 <= seq.order.size()) {
      seq.barriers.insert(b);
    }
  }
  if (seq.order.empty()) {
    throw InvalidWorkflowError("workflow has no task states on the main path");
  }
  return seq;
}

}  // namespace costless

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "costless/types.hpp"

namespace costless {

struct TaskState {
  std::optional<std::string> next;
  bool end = false;
};

struct ParallelState {
  // Each branch is a chain of function names; only single-function
  // chains are supported (longer chains raise UnsupportedStateError).
  std::vector<std::vector<std::string>> branches;
  std::optional<std::string> next;
  bool end = false;
};

struct ChoiceState {
  std::string main_next;
  std::vector<std::string> other_next;  // error-handling branches, excluded
};

using State = std::variant<TaskState, ParallelState, ChoiceState>;

struct WorkflowSpec {
  std::string start;
  std::map<std::string, State> states;
};

/// Linearized workflow: an ordered function list plus parallel-group and
/// fusion-barrier annotations, and the retained main-path DAG edges.
struct FnSeq {
  std::vector<FunctionId> order;
  // Inclusive index ranges whose members run in parallel.
  std::vector<std::pair<std::size_t, std::size_t>> parallel_groups;
  // Boundary positions b in [1, n-1]: no span may contain both b-1 and b.
  std::set<std::size_t> barriers;
  // Main-path dependency edges, in traversal order.
  std::vector<std::pair<FunctionId, FunctionId>> adjacency;

  std::size_t size() const { return order.size(); }
  std::size_t index_of(const FunctionId& fn) const;

  // The parallel group exactly equal to [first, last], if any.
  std::optional<std::size_t> group_equal(std::size_t first, std::size_t last) const;
  // True when [first, last] neither crosses a barrier nor straddles a group.
  bool range_ok(std::size_t first, std::size_t last) const;
};

FnSeq to_fnseq(const WorkflowSpec& workflow);

}  // namespace costless

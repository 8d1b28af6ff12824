// trirecom: step traces and the checked walk used to build them.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "trirecom/moves.hpp"

namespace trirecom {

/// A source partition plus the recombination steps applied to it in order.
struct Trace {
  Partition source;
  std::vector<RecomStep> steps;
  std::vector<std::string> notes;  // which procedure produced each step
  bool verified = false;

  explicit Trace(Partition src) : source(std::move(src)) {}
  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  /// Partition after the last step (the source when empty).
  Partition final_state() const;
  /// Appends `other`, whose source must equal this trace's final state.
  void append(const Trace& other);
};

/// Raised when a constructive procedure reaches a state its hypotheses rule
/// out; `where` names the procedure and sub-case for debugging.
class ProcedureFailure : public std::runtime_error {
 public:
  ProcedureFailure(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Mutable cursor over a trace. Every flip and recombination is re-checked
/// (validity, Ω membership, locked vertices) before it is recorded.
class Walk {
 public:
  explicit Walk(Partition start) : cur_(start), trace_(std::move(start)) {}

  const Partition& current() const { return cur_; }
  const Trace& trace() const { return trace_; }
  Trace take() { return std::move(trace_); }

  /// Vertices no step may reassign.
  Mask locked = 0;

  void flip(int id, int to, const std::string& note);
  /// Replaces the whole labelling; `untouched` must keep its vertex set.
  void recombine(const Labels& after, int untouched, const std::string& note);
  void append(const Trace& t);
  std::size_t steps() const { return trace_.size(); }

 private:
  Partition cur_;
  Trace trace_;
};

}  // namespace trirecom

// trirecom: step traces and the checked walk used to build them.
#include "trirecom/trace.hpp"

namespace trirecom {

Partition Trace::final_state() const {
  if (steps.empty()) return source;
  return source.with_labels(steps.back().after);
}

void Trace::append(const Trace& other) {
  if (!(other.source == final_state())) throw std::invalid_argument("trace append: endpoints do not match");
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  verified = false;
}

void Walk::flip(int id, int to, const std::string& note) {
  if ((locked >> id) & 1U) throw ProcedureFailure(note, "flip touches a locked vertex");
  if (!flip_valid(cur_, id, to)) throw ProcedureFailure(note, "flip is not valid");
  const FlipStep f{cur_.region().vertex(id), cur_.label(id), to};
  RecomStep step = lift_flip(cur_, f);
  Partition next = cur_.with_labels(step.after);
  if (!in_omega(next)) throw ProcedureFailure(note, "flip leaves Omega");
  cur_ = std::move(next);
  trace_.steps.push_back(std::move(step));
  trace_.notes.push_back(note);
}

void Walk::recombine(const Labels& after, int untouched, const std::string& note) {
  Partition next = cur_.with_labels(after);
  for (int d = 1; d <= 3; ++d)
    if ((cur_.district(d) & locked) != (next.district(d) & locked))
      throw ProcedureFailure(note, "recombination touches a locked vertex");
  if (next.district(untouched) != cur_.district(untouched))
    throw ProcedureFailure(note, "recombination changes its untouched district");
  if (next == cur_) return;
  if (!in_omega(next)) throw ProcedureFailure(note, "recombination leaves Omega: " + classify(next).reason);
  cur_ = std::move(next);
  trace_.steps.push_back({untouched, after});
  trace_.notes.push_back(note);
}

void Walk::append(const Trace& t) {
  trace_.append(t);
  cur_ = trace_.final_state();
}

}  // namespace trirecom

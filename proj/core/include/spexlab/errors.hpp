#pragma once

#include <stdexcept>
#include <string>

namespace spexlab {

enum class errc {
  invalid_vertex,
  loop_rejected,
  capacity_exceeded,
  not_bipartite,
  budget_exceeded,
  empty_forbidden_graph,
  lemma_inapplicable,
  empty_family,
  internal_invariant,
  invalid_parameters,
  convergence_failure,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_vertex: return "invalid_vertex";
    case errc::loop_rejected: return "loop_rejected";
    case errc::capacity_exceeded: return "capacity_exceeded";
    case errc::not_bipartite: return "not_bipartite";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::empty_forbidden_graph: return "empty_forbidden_graph";
    case errc::lemma_inapplicable: return "lemma_inapplicable";
    case errc::empty_family: return "empty_family";
    case errc::internal_invariant: return "internal_invariant";
    case errc::invalid_parameters: return "invalid_parameters";
    case errc::convergence_failure: return "convergence_failure";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void check(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace spexlab

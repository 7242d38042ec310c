// Error codes shared by every module.
#pragma once

#include <stdexcept>
#include <string>

namespace morseforge {

enum class errc {
  empty_input,
  duplicate_vertex_in_facet,
  unknown_vertex,
  bad_parameter,
  unknown_element,
  mixed_sources,
  not_a_matching,
  no_covers,
  size_limit,
  not_dominated,
  not_a_graph,
  consistency_error,
  bad_subset,
  hypothesis_violation,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace morseforge

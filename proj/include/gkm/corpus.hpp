#pragma once

#include <string>
#include <vector>

#include "gkm/document.hpp"

namespace gkm {

struct CorpusInstance {
  std::string name;
  std::string description;
  GraphDocument document;  ///< includes a default xi
  char expected_type = '?';
  std::vector<std::size_t> expected_betti;  ///< b_0 .. b_6
  bool expected_hard_lefschetz = true;
};

/// Names of the built-in instances, in a fixed order.
std::vector<std::string> corpus_names();

/// Throws Error(UnknownInstance).
CorpusInstance corpus_instance(const std::string& name);

std::vector<CorpusInstance> corpus();

}  // namespace gkm

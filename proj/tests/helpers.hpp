#pragma once

#include <memory>
#include <string>

#include "gkm/corpus.hpp"
#include "gkm/document.hpp"
#include "gkm/gkm_graph.hpp"
#include "gkm/polynomial.hpp"

namespace testing {

inline gkm::Rational q(long a, long b = 1) { return gkm::Rational(a, b); }
inline gkm::WeightVector v2(long a, long b) { return gkm::WeightVector{gkm::Rational(a), gkm::Rational(b)}; }
inline gkm::Polynomial x(std::size_t i, std::size_t rank = 2) { return gkm::Polynomial::variable(rank, i); }
inline gkm::Polynomial c(long a, long b = 1, std::size_t rank = 2) {
  return gkm::Polynomial::constant(rank, gkm::Rational(a, b));
}

inline std::shared_ptr<const gkm::GkmGraph> corpus_graph(const std::string& name) {
  return gkm::build_graph(gkm::corpus_instance(name).document).graph;
}

inline gkm::OrientedGkmGraph corpus_oriented(const std::string& name) {
  const auto inst = gkm::corpus_instance(name);
  const auto loaded = gkm::build_graph(inst.document);
  return gkm::orient(loaded.graph, *loaded.xi);
}

inline gkm::OrientedGkmGraph corpus_oriented(const std::string& name, const gkm::WeightVector& xi) {
  return gkm::orient(corpus_graph(name), xi);
}

}  // namespace testing

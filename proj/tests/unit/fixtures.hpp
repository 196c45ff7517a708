#pragma once

#include <string>
#include <vector>

#include "splitnull/graph_io.hpp"
#include "splitnull/split.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(SPLITNULL_TEST_DATA) + "/" + name; }

inline splitnull::Graph load(const std::string& name) {
  return splitnull::parse_graph(splitnull::read_text(data_path(name)), splitnull::GraphFormat::edges);
}

inline splitnull::SplitGraph load_split(const std::string& name) { return *splitnull::recognize_split(load(name)); }

inline splitnull::SplitGraph with_clique(const splitnull::Graph& g, splitnull::VertexSet k) {
  splitnull::SPartition p{k, splitnull::VertexSet::range(g.order()) - k};
  return splitnull::SplitGraph(g, p);
}

inline splitnull::QVector vec(std::initializer_list<long> xs) {
  splitnull::QVector v(static_cast<splitnull::Index>(xs.size()));
  splitnull::Index i = 0;
  for (long x : xs) v(i++) = splitnull::Rational(x);
  return v;
}

inline splitnull::QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<splitnull::Index>(rows.size());
  const auto c = r ? static_cast<splitnull::Index>(rows.begin()->size()) : 0;
  splitnull::QMatrix m(r, c);
  splitnull::Index i = 0;
  for (const auto& row : rows) {
    splitnull::Index j = 0;
    for (long x : row) m(i, j++) = splitnull::Rational(x);
    ++i;
  }
  return m;
}

/// u = c v for some nonzero rational c.
inline bool proportional(const splitnull::QVector& u, const splitnull::QVector& v) {
  if (u.size() != v.size()) return false;
  splitnull::Index pivot = -1;
  for (splitnull::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) pivot = i;
  if (pivot < 0 || u(pivot).is_zero()) return false;
  const splitnull::Rational c = u(pivot) / v(pivot);
  for (splitnull::Index i = 0; i < v.size(); ++i)
    if (u(i) != c * v(i)) return false;
  return true;
}

inline splitnull::Graph path(int n) {
  splitnull::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline splitnull::Graph cycle(int n) {
  splitnull::Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline splitnull::Graph complete(int n) {
  splitnull::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline splitnull::Graph star(int leaves) {
  splitnull::Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace fixtures

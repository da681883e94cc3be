#ifndef SKM_ENUMERATE_HPP
#define SKM_ENUMERATE_HPP

#include <vector>

#include "skm/graph.hpp"

namespace skm {

/// One representative per isomorphism class of all simple graphs of
/// order n, 1 <= n <= 8, in a deterministic (canonical-code) order.
/// Memoized; the returned reference stays valid for the process lifetime.
const std::vector<Graph>& enumerate_all(int n);

/// Connected classes only; counts 1,1,2,6,21,112,853,11117 for n=1..8.
std::vector<Graph> enumerate_connected(int n);

}  // namespace skm

#endif

#ifndef STRINGGRAPH_HPP
#define STRINGGRAPH_HPP

#include "stringgraph/error.hpp"
#include "stringgraph/extractors.hpp"
#include "stringgraph/geometry.hpp"
#include "stringgraph/graph.hpp"
#include "stringgraph/io.hpp"
#include "stringgraph/number.hpp"
#include "stringgraph/oracles.hpp"
#include "stringgraph/params.hpp"
#include "stringgraph/quasiplanar.hpp"
#include "stringgraph/separator.hpp"
#include "stringgraph/witness.hpp"

#endif // STRINGGRAPH_HPP

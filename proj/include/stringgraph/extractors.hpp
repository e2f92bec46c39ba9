#ifndef STRINGGRAPH_EXTRACTORS_HPP
#define STRINGGRAPH_EXTRACTORS_HPP

#include "extract/biclique.hpp"
#include "extract/color_or_clique.hpp"
#include "extract/dense_core.hpp"
#include "extract/independent.hpp"
#include "extract/multipartite.hpp"
#include "extract/neighborhood.hpp"

#endif // STRINGGRAPH_EXTRACTORS_HPP

#ifndef STRINGGRAPH_IO_HPP
#define STRINGGRAPH_IO_HPP

#include "io/formats.hpp"
#include "io/generate.hpp"
#include "io/report.hpp"
#include "io/survey.hpp"

#endif // STRINGGRAPH_IO_HPP

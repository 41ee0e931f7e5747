#ifndef TIHANY_TIHANY_HPP
#define TIHANY_TIHANY_HPP

#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "clique.hpp"
#include "matching.hpp"
#include "chromatic.hpp"
#include "splitter.hpp"
#include "lab.hpp"

#endif // TIHANY_TIHANY_HPP

// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#ifndef REES_LAB_REES_LAB_HPP_
#define REES_LAB_REES_LAB_HPP_

#include "enumeration.hpp"
#include "exception.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "partition.hpp"
#include "predicates.hpp"
#include "rees.hpp"
#include "relations.hpp"
#include "retraction.hpp"
#include "table.hpp"
#include "theorems.hpp"
#include "triples.hpp"

#endif  // REES_LAB_REES_LAB_HPP_

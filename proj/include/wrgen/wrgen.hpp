#ifndef WRGEN_WRGEN_HPP
#define WRGEN_WRGEN_HPP

#include "wrgen/big_int.hpp"
#include "wrgen/bsgs.hpp"
#include "wrgen/cayley.hpp"
#include "wrgen/constructions.hpp"
#include "wrgen/element_set.hpp"
#include "wrgen/error.hpp"
#include "wrgen/group_spec.hpp"
#include "wrgen/perm.hpp"
#include "wrgen/rank.hpp"
#include "wrgen/table1.hpp"
#include "wrgen/wreath.hpp"

#endif

#ifndef ILF_ILF_HPP
#define ILF_ILF_HPP

#include "ilf/alphabet.hpp"
#include "ilf/factorization.hpp"
#include "ilf/groupings.hpp"
#include "ilf/inverse_lyndon.hpp"
#include "ilf/lyndon.hpp"
#include "ilf/oracle.hpp"
#include "ilf/suffix_sort.hpp"

#endif

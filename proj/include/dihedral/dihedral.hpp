#pragma once

#include "dihedral/additive.hpp"
#include "dihedral/arith.hpp"
#include "dihedral/claims.hpp"
#include "dihedral/group.hpp"
#include "dihedral/io.hpp"
#include "dihedral/residue_set.hpp"
#include "dihedral/stability.hpp"
#include "dihedral/survey.hpp"
#include "dihedral/word_length.hpp"

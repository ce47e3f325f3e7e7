#pragma once

#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/polymatrix.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/blanchfield.hpp"
#include "knotlab/twistspin.hpp"
#include "knotlab/branched.hpp"
#include "knotlab/io.hpp"

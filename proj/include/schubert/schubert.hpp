#pragma once

#include "schubert/error.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/classic.hpp"
#include "schubert/orthodontia.hpp"
#include "schubert/tableaux.hpp"
#include "schubert/linalg.hpp"
#include "schubert/weyl.hpp"
#include "schubert/classify.hpp"

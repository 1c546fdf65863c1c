#pragma once

#include "cksplice/abelian.hpp"
#include "cksplice/binary_matrix.hpp"
#include "cksplice/classify.hpp"
#include "cksplice/dynamics.hpp"
#include "cksplice/errors.hpp"
#include "cksplice/exact_linalg.hpp"
#include "cksplice/int_matrix.hpp"
#include "cksplice/matrix_io.hpp"
#include "cksplice/polynomial.hpp"
#include "cksplice/random.hpp"
#include "cksplice/surgery.hpp"
